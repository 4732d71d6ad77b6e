#include <gtest/gtest.h>

#include "support.hpp"

using namespace sprsynth;
using fixtures::P;
using fixtures::R;

namespace {

const Poly kSmall = P("s^4+2s^3+6s^2+6s+1");

void expect_consistent(const SprVerdict& v, const Poly& p, const Poly& q) {
  EXPECT_EQ(v.is_spr, v.reason == SprReason::Ok);
  EXPECT_EQ(v.witness_t.has_value(), v.reason == SprReason::RealPartNonpositive);
  if (v.is_spr) EXPECT_TRUE(hurwitz_stable(p)) << to_string(p) << " / " << to_string(q);
}

}  // namespace

TEST(IsSpr, Examples) {
  auto v = is_spr(kSmall, kSmall);
  EXPECT_TRUE(v.is_spr);
  EXPECT_EQ(v.reason, SprReason::Ok);

  const Poly b = P("0.5s^4+s^3+11s^2+7.6657s+2");
  for (const auto& a : kharitonov_vertices(fixtures::example1())) {
    auto w = is_spr(b, a);
    EXPECT_TRUE(w.is_spr) << to_string(a);
    expect_consistent(w, b, a);
  }

  auto u = is_spr(P("s+1"), P("s-1"));
  EXPECT_FALSE(u.is_spr);
  EXPECT_EQ(u.reason, SprReason::DenominatorNotHurwitz);
}

TEST(IsSpr, ReportsFirstViolatedClause) {
  EXPECT_EQ(is_spr(P("s+1"), P("s^2+s+1")).reason, SprReason::NotBiproper);
  EXPECT_EQ(is_spr(P("s^2+1"), P("s-1")).reason, SprReason::NotBiproper);
  auto v = is_spr(P("s-1"), P("s+1"));  // Re = (w^2 - 1)/(w^2 + 1)
  EXPECT_EQ(v.reason, SprReason::RealPartNonpositive);
  ASSERT_TRUE(v.witness_t.has_value());
  EXPECT_LE(real_part_numerator(P("s-1"), P("s+1"))(*v.witness_t), 0);
  EXPECT_THROW(is_spr(Poly{}, P("s+1")), InvalidInput);
  EXPECT_THROW(is_spr(P("s+1"), Poly{}), InvalidInput);
}

TEST(IsSpr, ConstantsAreBiproper) {
  EXPECT_TRUE(is_spr(P("2"), P("3")).is_spr);
  EXPECT_EQ(is_spr(P("-2"), P("3")).reason, SprReason::RealPartNonpositive);
}

TEST(IsSpr, ReasonNamesRoundTrip) {
  for (auto r : {SprReason::Ok, SprReason::NotBiproper, SprReason::DenominatorNotHurwitz, SprReason::RealPartNonpositive})
    EXPECT_EQ(parse_spr_reason(to_string(r)), r);
  EXPECT_THROW(parse_spr_reason("maybe"), InvalidInput);
}

TEST(IsSpr, WitnessesAreNonpositive) {
  fixtures::Random rng(71);
  int failing = 0;
  for (int i = 0; i < 300; ++i) {
    const Poly q = rng.stable_quartic();
    std::vector<Rational> c{rng.rational(-10, 100), rng.rational(-10, 100), rng.rational(-10, 100),
                            rng.rational(-10, 100), rng.rational(1, 2)};
    const Poly p(c);
    const auto v = is_spr(p, q);
    expect_consistent(v, p, q);
    if (v.reason == SprReason::RealPartNonpositive) {
      ++failing;
      EXPECT_GE(*v.witness_t, 0);
      EXPECT_LE(real_part_numerator(p, q)(*v.witness_t), 0) << to_string(p) << " / " << to_string(q);
    }
  }
  EXPECT_GT(failing, 50);
}

TEST(RePositive, Examples) {
  const Poly b = P("s^3+2s^2+2.56s+0.5");
  for (const auto& a : kharitonov_vertices(fixtures::example2())) EXPECT_TRUE(re_positive(b, a)) << to_string(a);

  fixtures::Random rng(73);
  for (int i = 0; i < 20; ++i) {
    const Poly a = rng.stable_quartic();
    const Poly c{rng.rational(0, 10) + Rational(1, 8), rng.rational(0, 100) + Rational(1, 8), Rational(a.coeff(3) + 1),
                 Rational(1)};
    EXPECT_FALSE(re_positive(c, a));  // leading term (a1 - x) t^3 is negative
  }
  EXPECT_TRUE(re_positive(P("1"), P("s+1")));
}

TEST(RePositive, Preconditions) {
  EXPECT_THROW(re_positive(P("1"), P("s-1")), PreconditionError);
  EXPECT_THROW(re_positive(P("s^2"), P("s+1")), PreconditionError);
  EXPECT_THROW(re_positive(Poly{}, P("s+1")), InvalidInput);
}

TEST(VertexCertificate, Examples) {
  const Poly b = P("0.5s^4+s^3+11s^2+7.6657s+2");
  EXPECT_TRUE(vertex_certificate(b, fixtures::vertex_list(fixtures::example1())).family_spr);
  const auto c4 = vertex_certificate(P("s^3+6s^2+73s+68"), fixtures::example4_vertices());
  EXPECT_TRUE(c4.family_spr);
  EXPECT_EQ(c4.per_vertex.size(), 3u);

  auto with_unstable = fixtures::vertex_list(fixtures::example1());
  with_unstable.push_back(P("s^4+s^3+s^2+s+1"));
  const auto bad = vertex_certificate(b, with_unstable);
  EXPECT_FALSE(bad.family_spr);
  EXPECT_EQ(bad.per_vertex.back().reason, SprReason::DenominatorNotHurwitz);

  EXPECT_THROW(vertex_certificate(b, {kSmall, P("s^3+s+1")}), InvalidInput);
  EXPECT_THROW(vertex_certificate(b, {}), InvalidInput);
}

TEST(VertexCertificate, ExtendsToConvexCombinations) {
  fixtures::Random rng(79);
  int certified = 0;
  for (int set = 0; set < 50; ++set) {
    // Vertices scattered around a stable base; the base itself as numerator.
    const Poly base = rng.stable_quartic();
    std::vector<Poly> vertices;
    while (vertices.size() < 3) {
      std::vector<Rational> c(base.coeffs().begin(), base.coeffs().end());
      for (std::size_t k = 0; k < 4; ++k) c[k] *= Rational(1) + rng.rational(-1, 1, 64) / 4;
      Poly v(c);
      if (hurwitz_stable(v)) vertices.push_back(v);
    }
    if (!vertex_certificate(base, vertices).family_spr) continue;
    ++certified;
    for (int m = 0; m < 20; ++m) {
      Rational w0 = rng.rational(0, 1, 64), w1 = rng.rational(0, 1, 64), w2 = rng.rational(0, 1, 64);
      if (w0 + w1 + w2 == 0) w0 = 1;
      const Rational sum = w0 + w1 + w2;
      const Poly member = vertices[0] * Rational(w0 / sum) + vertices[1] * Rational(w1 / sum) +
                          vertices[2] * Rational(w2 / sum);
      EXPECT_TRUE(is_spr(base, member).is_spr) << to_string(member);
    }
  }
  EXPECT_GE(certified, 25);
}

// ---- simplex ---------------------------------------------------------------------

TEST(Simplex, SolvesSmallProgram) {
  // max x + y  s.t.  x + 2y <= 4,  3x + y <= 6.
  const auto r = lp::maximize({{1, 2}, {3, 1}}, {4, 6}, {1, 1});
  ASSERT_EQ(r.status, lp::Status::Optimal);
  EXPECT_NEAR(r.x[0], 1.6, 1e-12);
  EXPECT_NEAR(r.x[1], 1.2, 1e-12);
  EXPECT_NEAR(r.objective, 2.8, 1e-12);
  EXPECT_NEAR(r.duals[0], 0.4, 1e-12);
  EXPECT_NEAR(r.duals[1], 0.2, 1e-12);
}

TEST(Simplex, DetectsUnboundednessAndBadInput) {
  EXPECT_EQ(lp::maximize({{1, -1}}, {1}, {1, 1}).status, lp::Status::Unbounded);
  EXPECT_THROW(lp::maximize({{1}}, {-1}, {1}), std::invalid_argument);
  EXPECT_THROW(lp::maximize({{1, 2}}, {1}, {1}), std::invalid_argument);
}

TEST(Simplex, DegenerateVertexTerminates) {
  // Several constraints through the optimum.
  const auto r = lp::maximize({{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}, {1, 1, 2, 3, 3}, {1, 1});
  ASSERT_EQ(r.status, lp::Status::Optimal);
  EXPECT_NEAR(r.objective, 2.0, 1e-12);
}

// ---- LP probe ----------------------------------------------------------------------

TEST(Probe, Example4QuadraticNumeratorIsInfeasible) {
  const auto r = lp_probe(fixtures::example4_vertices(), 2, {512});
  EXPECT_EQ(r.outcome, ProbeOutcome::Infeasible);
  EXPECT_LT(r.margin, 1e-6);
  EXPECT_FALSE(r.candidate.has_value());
  EXPECT_FALSE(r.certificate.empty());
}

TEST(Probe, Example4CubicNumeratorIsFeasibleAndVerified) {
  const auto v = fixtures::example4_vertices();
  const auto r = lp_probe(v, 3);
  ASSERT_EQ(r.outcome, ProbeOutcome::Feasible);
  ASSERT_TRUE(r.candidate.has_value());
  EXPECT_TRUE(vertex_certificate(*r.candidate, v).family_spr);
}

TEST(Probe, SingleQuarticAdmitsACubic) {
  const auto r = lp_probe({kSmall}, 3);
  ASSERT_EQ(r.outcome, ProbeOutcome::Feasible);
  EXPECT_TRUE(re_positive(*r.candidate, kSmall));
  // The synthesis pipeline agrees that a cubic exists.
  const auto s = synthesize_interval(IntervalQuartic::point(kSmall));
  EXPECT_TRUE(re_positive(s.numerator - Poly::monomial(s.r, 4), kSmall));
}

TEST(Probe, InfeasibilitySurvivesGridRefinement) {
  const auto v = fixtures::example4_vertices();
  bool infeasible = false;
  for (std::size_t n = 32; n <= 4096; n *= 2) {
    const bool now = lp_probe(v, 2, {n}).outcome == ProbeOutcome::Infeasible;
    EXPECT_TRUE(now || !infeasible) << "flipped back to feasible at " << n;
    if (n >= 512) EXPECT_TRUE(now) << n;
    infeasible = now;
  }
  // Re[1/a(jw)] changes sign for a quartic, so no constant numerator works.
  for (std::size_t n : {32u, 64u, 128u, 256u}) EXPECT_EQ(lp_probe({kSmall}, 0, {n}).outcome, ProbeOutcome::Infeasible);
}

TEST(Probe, RejectsBadInput) {
  EXPECT_THROW(lp_probe({}, 1), InvalidInput);
  EXPECT_THROW(lp_probe({kSmall}, 3, {3}), InvalidInput);
  EXPECT_THROW(lp_probe({kSmall}, 5), InvalidInput);
  EXPECT_THROW(lp_probe({kSmall, P("s^3+s^2+s+0.5")}, 2), InvalidInput);
  EXPECT_THROW(lp_probe({P("s^4+s^3+s^2+s+1")}, 2), PreconditionError);
}

TEST(Probe, FrequencyGridIsLogarithmicAndNested) {
  const auto g = log_frequency_grid(6, 1e-3, 1e3);
  ASSERT_EQ(g.size(), 6u);
  EXPECT_NEAR(g.front(), 1e-3, 1e-18);
  EXPECT_NEAR(g[3], 1.0, 1e-12);
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_NEAR(g[i] / g[i - 1], 10.0, 1e-9);
  for (std::size_t n : {8u, 100u, 512u}) {
    const auto coarse = log_frequency_grid(n, 1e-3, 1e3), fine = log_frequency_grid(2 * n, 1e-3, 1e3);
    for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(coarse[k], fine[2 * k]);
  }
  EXPECT_THROW(log_frequency_grid(0, 1e-3, 1e3), InvalidInput);
}
