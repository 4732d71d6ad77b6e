#pragma once

// Constructive SPR synthesis for fourth-order interval families and segments:
//   1. a point (x, y) inside every feasible region,
//   2. the cubic b(s) = s^3 + x s^2 + y s + eps with eps below its bisected maximum,
//   3. b~(s) = b(s) + r s^4 with r below its bisected maximum,
//   4. an exact SPR re-check of b~ against every vertex.

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "sprsynth/families.hpp"
#include "sprsynth/regions.hpp"
#include "sprsynth/spr.hpp"

namespace sprsynth {

struct SynthesisOptions {
  Rational epsilon_fraction{1, 2};
  Rational r_fraction{1, 2};
  /// Upper-bracket doublings before a maximum is reported as capped.
  int max_doublings = 32;
  /// Bisection stops once hi - lo <= lo * 2^-tolerance_bits.
  unsigned tolerance_bits = 20;
};

struct FeasiblePoint {
  Point2 point;
  /// Which construction produced it: "degenerate-delta", "segment-intersection",
  /// "corner-candidate", "sweep", "center-line" or "dual-search".
  std::string construction;
};

/// Largest admissible value of a downward-closed predicate, by bisection.
struct BisectionResult {
  Rational value;
  bool capped = false;  // predicate still held at the largest bracket tried
  int probes = 0;
};

struct SynthesisResult {
  Point2 point;
  std::string construction;
  Rational epsilon;
  Rational epsilon_max;
  bool epsilon_capped = false;
  Rational r;
  Rational r_max;
  bool r_capped = false;
  Poly numerator;  // r s^4 + s^3 + x s^2 + y s + eps
  std::vector<Poly> vertices;
  std::vector<SprVerdict> verdicts;

  bool all_spr() const {
    for (const auto& v : verdicts)
      if (!v.is_spr) return false;
    return !verdicts.empty();
  }
};

namespace detail {

template <typename Pred>
BisectionResult bisect_max(Pred&& holds, Rational hi, const SynthesisOptions& opt, const char* what) {
  BisectionResult res;
  int doublings = 0;
  while (true) {
    ++res.probes;
    if (!holds(hi)) break;
    if (doublings++ >= opt.max_doublings) {
      res.value = hi;
      res.capped = true;
      return res;
    }
    hi *= 2;
  }
  Rational lo = 0;
  Rational tol = Rational(1) / Rational(mpz_class(1) << opt.tolerance_bits);
  for (int iter = 0; iter < 400 && (lo == 0 || hi - lo > lo * tol); ++iter) {
    Rational mid = (lo + hi) / 2;
    ++res.probes;
    if (holds(mid))
      lo = mid;
    else
      hi = mid;
  }
  if (lo == 0) throw InternalContradiction(std::string("no admissible ") + what + " found by bisection");
  res.value = lo;
  return res;
}

inline Rational checked_fraction(const Rational& f, const char* what) {
  if (f <= 0 || f > 1) throw InvalidInput(std::string(what) + " fraction must lie in (0, 1]");
  return f;
}

/// Line through p0, p1 meets line through q0, q1 at parameters strictly inside both segments.
inline std::optional<Point2> open_segment_intersection(const Point2& p0, const Point2& p1, const Point2& q0,
                                                       const Point2& q1) {
  Rational dx1 = p1.x - p0.x, dy1 = p1.y - p0.y;
  Rational dx2 = q1.x - q0.x, dy2 = q1.y - q0.y;
  Rational det = dx1 * (-dy2) - dy1 * (-dx2);
  if (det == 0) return std::nullopt;
  Rational rx = q0.x - p0.x, ry = q0.y - p0.y;
  Rational s = (rx * (-dy2) - ry * (-dx2)) / det;
  Rational u = (dx1 * ry - dy1 * rx) / det;
  if (s <= 0 || s >= 1 || u <= 0 || u >= 1) return std::nullopt;
  return Point2{Rational(p0.x + s * dx1), Rational(p0.y + s * dy1)};
}

}  // namespace detail

/// Interval bounds recovered from vertices in the canonical Kharitonov order.
inline IntervalQuartic interval_from_vertices(const std::array<Poly, 4>& v) {
  for (const auto& p : v)
    if (p.degree() != 4u || p.lead() != 1) throw InvalidInput("Kharitonov vertices must be monic quartics");
  IntervalQuartic k({v[1].coeff(3), v[1].coeff(2), v[0].coeff(1), v[0].coeff(0)},
                    {v[0].coeff(3), v[0].coeff(2), v[1].coeff(1), v[1].coeff(0)});
  if (kharitonov_vertices(k) != v) throw InvalidInput("polynomials are not Kharitonov vertices in canonical order");
  return k;
}

/// A point in the intersection of the four feasible regions of an interval
/// family's Kharitonov vertices. Every returned point is membership-verified.
inline FeasiblePoint feasible_point_interval(const std::array<Poly, 4>& vertices) {
  const IntervalQuartic k = interval_from_vertices(vertices);
  if (int bad = first_unstable_vertex(k); bad >= 0)
    throw PreconditionError("vertex a" + std::to_string(bad + 1) + "(s) = " +
                            to_string(vertices[static_cast<std::size_t>(bad)]) + " is not Hurwitz stable");

  std::vector<RegionBundle> regions;
  for (const auto& v : vertices) regions.emplace_back(v);
  auto in_all = [&](const Point2& p) {
    for (const auto& r : regions)
      if (!r.in_omega(p)) return false;
    return true;
  };

  const Rational &a1m = k.lo(1), &a1p = k.hi(1), &a2m = k.lo(2), &a3m = k.lo(3), &a3p = k.hi(3), &a4p = k.hi(4);
  const Rational y24 = a3p / a1m;
  const Rational y13 = a3m / a1p;

  if (y24 == y13) {
    Rational delta = a1m / 2;
    for (int i = 0; i <= 64; ++i, delta /= 2)
      if (Point2 p{delta, y24}; in_all(p)) return {p, "degenerate-delta"};
    throw InternalContradiction("no delta > 0 puts (delta, a3/a1) in every region");
  }

  const Point2 a13{Rational(0), y13};
  const Point2 b3{a1p, Rational(a1p * a4p / a3m)};
  const Point2 a24{Rational(0), y24};
  const Point2 b2{a1m, Rational(a1m * a4p / a3p)};
  if (auto p = detail::open_segment_intersection(a13, b3, a24, b2); p && in_all(*p))
    return {*p, "segment-intersection"};

  const Point2 corner{a1m, Rational((a2m / a1p - 2 * a3m / (a1p * a1p)) * a1m + a3m / a1p)};
  if (in_all(corner)) return {corner, "corner-candidate"};

  // Low-discrepancy sweep of the open segment (A13, B3) with golden-ratio steps.
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int i = 1; i <= 512; ++i) {
    double f = std::fmod(phi * i, 1.0);
    Rational s = round_to_dyadic(f, 20);
    if (s <= 0 || s >= 1) continue;
    Point2 p{Rational(a13.x + s * (b3.x - a13.x)), Rational(a13.y + s * (b3.y - a13.y))};
    if (in_all(p)) return {p, "sweep"};
  }
  throw InternalContradiction("no candidate point lies in all four feasible regions");
}

inline FeasiblePoint feasible_point_interval(const IntervalQuartic& k) {
  return feasible_point_interval(kharitonov_vertices(k));
}

/// A point inside both ellipses of a stable quartic segment's endpoints.
inline FeasiblePoint feasible_point_segment(const Poly& a, const Poly& b) {
  const Segment seg(a, b);
  if (seg.degree() != 4) throw InvalidInput("segment synthesis needs quartic endpoints");
  if (!segment_stable(seg)) throw PreconditionError("segment is not robustly Hurwitz stable");
  const RegionBundle ra(a), rb(b);
  auto in_both = [&](const Point2& p) { return ra.in_omega_e(p) && rb.in_omega_e(p); };

  const Point2 ca = ra.conic.center(), cb = rb.conic.center();
  const Point2 mid{Rational((ca.x + cb.x) / 2), Rational((ca.y + cb.y) / 2)};
  if (in_both(mid)) return {mid, "center-line"};
  for (int i = 0; i <= 32; ++i) {
    Rational s = make_rational(i, 32);
    Point2 p{Rational(ca.x + s * (cb.x - ca.x)), Rational(ca.y + s * (cb.y - ca.y))};
    if (in_both(p)) return {p, "center-line"};
  }

  // Minimize max(Qa, Qb) through its concave dual g(l) = min_p l Qa + (1-l) Qb,
  // each conic scaled so its minimum is -1. Candidates are rounded to short
  // dyadics and verified exactly.
  auto normalized = [](const Conic& k) {
    auto d = k.cast<double>();
    double m = -d(d.center());
    return ConicT<double>{d.A / m, d.B / m, d.C / m, d.D / m, d.E / m, d.F / m};
  };
  const auto qa = normalized(ra.conic), qb = normalized(rb.conic);
  auto blend = [&](double l) {
    return ConicT<double>{l * qa.A + (1 - l) * qb.A, l * qa.B + (1 - l) * qb.B, l * qa.C + (1 - l) * qb.C,
                          l * qa.D + (1 - l) * qb.D, l * qa.E + (1 - l) * qb.E, l * qa.F + (1 - l) * qb.F};
  };
  auto try_point = [&](const Point2D& p) -> std::optional<Point2> {
    for (unsigned bits : {8u, 12u, 16u, 20u, 28u, 36u, 44u, 52u}) {
      Point2 q{round_to_dyadic(p.x, bits), round_to_dyadic(p.y, bits)};
      if (in_both(q)) return q;
    }
    return std::nullopt;
  };
  auto dual = [&](double l) {
    auto c = blend(l);
    return c(c.center());
  };
  double lo = 0.0, hi = 1.0;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = dual(x1), f2 = dual(x2);
  for (int it = 0; it < 200; ++it) {
    for (double l : {x1, x2})
      if (auto q = try_point(blend(l).center())) return {*q, "dual-search"};
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = dual(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = dual(x1);
    }
    if (hi - lo < 1e-15) break;
  }
  throw InternalContradiction("no point found inside both ellipses of a stable segment");
}

/// Largest eps (to relative 2^-20) such that every eps' in (0, eps] makes
/// s^3 + x s^2 + y s + eps' have positive real-part ratio against each
/// denominator. Bisection is sound because the numerator is affine in eps and
/// nonnegative at eps = 0, so admissible values are downward closed.
inline BisectionResult epsilon_max(const Point2& point, const std::vector<Poly>& denominators,
                                   const SynthesisOptions& opt = {}) {
  if (denominators.empty()) throw InvalidInput("epsilon_max needs at least one denominator");
  std::vector<std::pair<Poly, Poly>> parts;  // N0(t), E(t): N = N0 + eps E
  Rational a4_max = 0;
  for (const auto& a : denominators) {
    if (!RegionBundle(a).in_omega(point))
      throw PreconditionError("point (" + to_exact_string(point.x) + ", " + to_exact_string(point.y) +
                              ") is outside the feasible region of " + to_string(a));
    const Poly c0{Rational(0), point.y, point.x, Rational(1)};
    parts.emplace_back(real_part_numerator_poly(c0, a), real_part_numerator_poly(Poly{Rational(1)}, a));
    if (a.coeff(0) > a4_max) a4_max = a.coeff(0);
  }
  auto holds = [&](const Rational& eps) {
    for (const auto& [n0, e] : parts)
      if (!positive_on_half_line(n0 + e * eps)) return false;
    return true;
  };
  return detail::bisect_max(holds, Rational(1 + a4_max), opt, "epsilon");
}

/// Largest r (to relative 2^-20) such that b(s) + r' s^4 over each denominator
/// is SPR for all r' in (0, r].
inline BisectionResult r_max(const Poly& b, const std::vector<Poly>& denominators, const SynthesisOptions& opt = {}) {
  if (denominators.empty()) throw InvalidInput("r_max needs at least one denominator");
  if (b.is_zero()) throw InvalidInput("r_max of the zero polynomial");
  std::vector<std::pair<Poly, Poly>> parts;  // N_b(t), t^2 E(t)
  for (const auto& a : denominators) {
    if (a.degree() != 4u) throw InvalidInput("r_max expects quartic denominators");
    if (b.degree_or_throw() >= 4) throw PreconditionError("r_max expects a numerator of degree below 4");
    if (!re_positive(b, a))
      throw PreconditionError("Re[b/a] is not positive for b = " + to_string(b) + ", a = " + to_string(a));
    parts.emplace_back(real_part_numerator_poly(b, a), real_part_numerator_poly(Poly::monomial(Rational(1), 4), a));
  }
  auto holds = [&](const Rational& r) {
    for (const auto& [nb, m] : parts)
      if (!positive_on_half_line(nb + m * r)) return false;
    return true;
  };
  return detail::bisect_max(holds, Rational(1), opt, "r");
}

namespace detail {

inline SynthesisResult finish_synthesis(const FeasiblePoint& fp, std::vector<Poly> vertices,
                                        const SynthesisOptions& opt) {
  const Rational ef = checked_fraction(opt.epsilon_fraction, "epsilon");
  const Rational rf = checked_fraction(opt.r_fraction, "r");
  SynthesisResult res;
  res.point = fp.point;
  res.construction = fp.construction;
  auto eps = epsilon_max(fp.point, vertices, opt);
  res.epsilon_max = eps.value;
  res.epsilon_capped = eps.capped;
  res.epsilon = ef * eps.value;
  const Poly b{res.epsilon, fp.point.y, fp.point.x, Rational(1)};
  auto r = r_max(b, vertices, opt);
  res.r_max = r.value;
  res.r_capped = r.capped;
  res.r = rf * r.value;
  res.numerator = b + Poly::monomial(res.r, 4);
  for (const auto& v : vertices) res.verdicts.push_back(is_spr(res.numerator, v));
  res.vertices = std::move(vertices);
  if (!res.all_spr()) throw InternalContradiction("synthesized numerator failed exact SPR re-verification");
  return res;
}

}  // namespace detail

/// Interval-family synthesis: a fixed b~(s) with b~/a SPR for every member of K.
inline SynthesisResult synthesize_interval(const IntervalQuartic& k, const SynthesisOptions& opt = {}) {
  auto v = kharitonov_vertices(k);
  if (int bad = first_unstable_vertex(k); bad >= 0)
    throw PreconditionError("family is not robustly stable: vertex a" + std::to_string(bad + 1) +
                            "(s) = " + to_string(v[static_cast<std::size_t>(bad)]) + " is not Hurwitz");
  auto fp = feasible_point_interval(v);
  return detail::finish_synthesis(fp, {v.begin(), v.end()}, opt);
}

/// Segment synthesis: a fixed b~(s) with b~/a SPR along the whole segment.
inline SynthesisResult synthesize_segment(const Segment& seg, const SynthesisOptions& opt = {}) {
  if (seg.degree() != 4) throw InvalidInput("segment synthesis needs quartic endpoints");
  if (!segment_stable(seg)) throw PreconditionError("segment is not robustly Hurwitz stable");
  auto fp = feasible_point_segment(seg.end_a(), seg.end_b());
  return detail::finish_synthesis(fp, {seg.end_a(), seg.end_b()}, opt);
}

}  // namespace sprsynth
