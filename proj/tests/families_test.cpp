#include <gtest/gtest.h>

#include "support.hpp"

using namespace sprsynth;
using fixtures::P;
using fixtures::R;

TEST(IntervalQuartic, ValidatesBounds) {
  EXPECT_THROW(IntervalQuartic({R("0"), R("1"), R("1"), R("1")}, {R("1"), R("1"), R("1"), R("1")}), InvalidInput);
  EXPECT_THROW(IntervalQuartic({R("1"), R("-1"), R("1"), R("1")}, {R("1"), R("1"), R("1"), R("1")}), InvalidInput);
  EXPECT_THROW(IntervalQuartic({R("2"), R("1"), R("1"), R("1")}, {R("1"), R("1"), R("1"), R("1")}), InvalidInput);
  EXPECT_NO_THROW(IntervalQuartic({R("1"), R("1"), R("1"), R("1")}, {R("1"), R("1"), R("1"), R("1")}));
}

TEST(Kharitonov, Example1Vertices) {
  auto v = kharitonov_vertices(fixtures::example1());
  EXPECT_EQ(v[0], P("s^4+89s^3+56s^2+88s+1"));
  EXPECT_EQ(v[1], P("s^4+11s^3+56s^2+88s+50"));
  EXPECT_EQ(v[2], P("s^4+89s^3+56s^2+88s+50"));
  EXPECT_EQ(v[3], P("s^4+11s^3+56s^2+88s+1"));
}

TEST(Kharitonov, Example2Vertices) {
  auto v = kharitonov_vertices(fixtures::example2());
  EXPECT_EQ(v[0], P("s^4+5s^3+6s^2+4s+0.5"));
  EXPECT_EQ(v[1], P("s^4+2s^3+6s^2+6s+1"));
  EXPECT_EQ(v[2], P("s^4+5s^3+6s^2+4s+1"));
  EXPECT_EQ(v[3], P("s^4+2s^3+6s^2+6s+0.5"));
}

TEST(Kharitonov, Example3Vertices) {
  auto v = kharitonov_vertices(fixtures::example3());
  EXPECT_EQ(v[0], P("s^4+2.5s^3+6s^2+4s+0.5"));
  EXPECT_EQ(v[1], P("s^4+2s^3+5s^2+6s+5"));
  EXPECT_EQ(v[2], P("s^4+2.5s^3+5s^2+4s+5"));
  EXPECT_EQ(v[3], P("s^4+2s^3+6s^2+6s+0.5"));
}

TEST(Kharitonov, PointIntervalGivesFourEqualVertices) {
  const Poly a = P("s^4+2s^3+6s^2+6s+1");
  auto v = kharitonov_vertices(IntervalQuartic::point(a));
  for (const auto& p : v) EXPECT_EQ(p, a);
  EXPECT_THROW(IntervalQuartic::point(P("2s^4+1")), InvalidInput);
}

TEST(RobustStability, Examples) {
  EXPECT_TRUE(interval_robustly_stable(fixtures::example1()));
  EXPECT_TRUE(interval_robustly_stable(fixtures::example2()));
  EXPECT_TRUE(interval_robustly_stable(fixtures::example3()));
  EXPECT_TRUE(interval_robustly_stable(IntervalQuartic::point(P("s^4+2s^3+6s^2+6s+1"))));

  auto hi = fixtures::example2().upper();
  hi[3] *= 10000;
  const IntervalQuartic bad(fixtures::example2().lower(), hi);
  EXPECT_FALSE(interval_robustly_stable(bad));
  EXPECT_EQ(first_unstable_vertex(bad), 1);  // a2(s) = s^4+2s^3+6s^2+6s+10000
  EXPECT_GT(fixtures::max_root_real_part(kharitonov_vertices(bad)[1]), 0.0);
}

TEST(RobustStability, InteriorMembersAreStable) {
  fixtures::Random rng(23);
  std::vector<IntervalQuartic> families{fixtures::example1(), fixtures::example2(), fixtures::example3()};
  for (int i = 0; i < 5; ++i) families.push_back(rng.stable_family());
  for (const auto& k : families) {
    ASSERT_TRUE(interval_robustly_stable(k));
    for (int m = 0; m < 100; ++m) EXPECT_TRUE(hurwitz_stable(rng.member(k)));
  }
}

// ---- segments ------------------------------------------------------------------

TEST(Segment, ValidatesEndpoints) {
  EXPECT_THROW(Segment(P("s^2+s+1"), P("s+1")), InvalidInput);
  EXPECT_THROW(Segment(P("2s+1"), P("s+1")), InvalidInput);
  EXPECT_THROW(Segment(Poly{}, P("s+1")), InvalidInput);
  Segment s(P("s+1"), P("s+3"));
  EXPECT_EQ(s.at(R("1/2")), P("s+2"));
  EXPECT_EQ(s.at(R("1")), P("s+1"));
}

TEST(Segment, Examples) {
  auto e4 = fixtures::example4_vertices();
  EXPECT_TRUE(segment_stable(Segment(e4[0], e4[1])));
  EXPECT_TRUE(segment_stable(Segment(P("s+1"), P("s+1"))));
  // Endpoints are stable (1.1*1.1 > 1.2 and 0.9*0.9 > 0.8); the midpoint
  // s^3+s^2+s+1 has roots +-j.
  const Segment marginal(P("s^3+1.1s^2+1.1s+1.2"), P("s^3+0.9s^2+0.9s+0.8"));
  EXPECT_TRUE(hurwitz_stable(marginal.end_a()));
  EXPECT_TRUE(hurwitz_stable(marginal.end_b()));
  EXPECT_GT(fixtures::max_root_real_part(marginal.at(R("1/2"))), -1e-9);
  EXPECT_FALSE(segment_stable(marginal));
}

TEST(Segment, UnstableEndpoint) {
  EXPECT_FALSE(segment_stable(Segment(P("s^2+s+1"), P("s^2-s+1"))));
  EXPECT_FALSE(segment_stable(Segment(P("s^3+s^2+s+2"), P("s^3+2s^2+2s+1"))));
}

TEST(Segment, Example1CounterexamplePairIsStable) {
  auto v = kharitonov_vertices(fixtures::example1());
  EXPECT_TRUE(segment_stable(Segment(v[1], v[2])));
  EXPECT_TRUE(segment_stable(Segment(v[0], v[3])));
}

TEST(Segment, AgreesWithLambdaGrid) {
  fixtures::Random rng(29);
  int stable = 0, unstable = 0;
  for (int i = 0; i < 100; ++i) {
    const long deg = rng.integer(2, 5);
    auto random_stable = [&] {
      while (true) {
        std::vector<Rational> c;
        for (long k = 0; k < deg; ++k) c.push_back(rng.rational(1, 30));
        c.push_back(Rational(1));
        Poly p(c);
        if (hurwitz_stable(p)) return p;
      }
    };
    const Segment seg(random_stable(), random_stable());
    const bool verdict = segment_stable(seg);
    bool grid = true;
    for (int k = 0; k <= 1000 && grid; ++k) grid = hurwitz_stable(seg.at(make_rational(k, 1000)));
    if (verdict) {
      EXPECT_TRUE(grid) << to_string(seg.end_a()) << " | " << to_string(seg.end_b());
    }
    (verdict ? stable : unstable)++;
  }
  EXPECT_GT(stable, 0);
  EXPECT_GT(unstable, 0);
}

TEST(Segment, DetectsConstructedImaginaryAxisCrossings) {
  // Midpoint (s + c)(s^2 + w2) has roots +-j sqrt(w2). The endpoints
  //   s^3 + (c +- d)s^2 + (w2 +- d)s + (c w2 +- d(c + w2))
  // satisfy the cubic Routh condition with margin d^2 > 0, so both are stable.
  fixtures::Random rng(31);
  for (int i = 0; i < 40; ++i) {
    const Rational c = rng.rational(1, 20), w2 = rng.rational(1, 20);
    const Rational d = std::min(c, w2) * rng.rational(1, 9, 16) / 20;  // below min(c, w2) / 2
    const Rational k = d * (c + w2);
    const Poly a{Rational(c * w2 + k), Rational(w2 + d), Rational(c + d), Rational(1)};
    const Poly b{Rational(c * w2 - k), Rational(w2 - d), Rational(c - d), Rational(1)};
    ASSERT_TRUE(hurwitz_stable(a) && hurwitz_stable(b)) << to_string(a) << " | " << to_string(b);
    EXPECT_FALSE(segment_stable(Segment(a, b))) << to_string(a) << " | " << to_string(b);
  }
}
