#pragma once

// Interval quartic families, their Kharitonov vertices, and polynomial
// segments with an exact robust-stability test.

#include <array>
#include <string>

#include "sprsynth/stability.hpp"
#include "sprsynth/sturm.hpp"

namespace sprsynth {

/// Monic quartics s^4 + a1 s^3 + a2 s^2 + a3 s + a4 with ai in [lower[i-1], upper[i-1]].
class IntervalQuartic {
 public:
  IntervalQuartic(std::array<Rational, 4> lower, std::array<Rational, 4> upper)
      : lower_(std::move(lower)), upper_(std::move(upper)) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (lower_[i] <= 0)
        throw InvalidInput("interval bound a" + std::to_string(i + 1) + "- = " + to_exact_string(lower_[i]) +
                           " must be strictly positive");
      if (lower_[i] > upper_[i])
        throw InvalidInput("interval bound a" + std::to_string(i + 1) + "- exceeds a" + std::to_string(i + 1) + "+");
    }
  }

  /// Degenerate box holding the single monic quartic `p`.
  static IntervalQuartic point(const Poly& p) {
    if (p.degree() != 4u || p.lead() != 1) throw InvalidInput("point interval needs a monic quartic");
    std::array<Rational, 4> c{p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0)};
    return IntervalQuartic(c, c);
  }

  /// Bound of a_i, i in 1..4.
  const Rational& lo(int i) const { return lower_.at(static_cast<std::size_t>(i - 1)); }
  const Rational& hi(int i) const { return upper_.at(static_cast<std::size_t>(i - 1)); }
  const std::array<Rational, 4>& lower() const { return lower_; }
  const std::array<Rational, 4>& upper() const { return upper_; }

  /// Member with a_i = lo + u_i (hi - lo), u_i in [0, 1].
  Poly member(const std::array<Rational, 4>& u) const {
    std::vector<Rational> c(5);
    c[4] = 1;
    for (int i = 1; i <= 4; ++i) c[static_cast<std::size_t>(4 - i)] = lo(i) + u[static_cast<std::size_t>(i - 1)] * (hi(i) - lo(i));
    return Poly(std::move(c));
  }

  friend bool operator==(const IntervalQuartic&, const IntervalQuartic&) = default;

 private:
  std::array<Rational, 4> lower_;
  std::array<Rational, 4> upper_;
};

/// Monic quartic from its descending coefficients a1..a4.
inline Poly monic_quartic(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4) {
  return Poly{a4, a3, a2, a1, Rational(1)};
}

/// The four Kharitonov vertices, in this fixed order (signs on a1..a4):
///   a1(s): + + - -     a2(s): - - + +     a3(s): + - - +     a4(s): - + + -
inline std::array<Poly, 4> kharitonov_vertices(const IntervalQuartic& k) {
  return {
      monic_quartic(k.hi(1), k.hi(2), k.lo(3), k.lo(4)),
      monic_quartic(k.lo(1), k.lo(2), k.hi(3), k.hi(4)),
      monic_quartic(k.hi(1), k.lo(2), k.lo(3), k.hi(4)),
      monic_quartic(k.lo(1), k.hi(2), k.hi(3), k.lo(4)),
  };
}

/// Index (0-based) of the first non-Hurwitz vertex, or -1 when all four pass.
inline int first_unstable_vertex(const IntervalQuartic& k) {
  auto v = kharitonov_vertices(k);
  for (int i = 0; i < 4; ++i)
    if (!hurwitz_stable(v[static_cast<std::size_t>(i)])) return i;
  return -1;
}

/// Every member of the box is Hurwitz iff the four vertices are.
inline bool interval_robustly_stable(const IntervalQuartic& k) { return first_unstable_vertex(k) < 0; }

/// Convex combinations lambda * endA + (1 - lambda) * endB, lambda in [0, 1].
class Segment {
 public:
  Segment(Poly end_a, Poly end_b) : a_(std::move(end_a)), b_(std::move(end_b)) {
    if (a_.is_zero() || b_.is_zero()) throw InvalidInput("segment endpoint is the zero polynomial");
    if (a_.degree() != b_.degree())
      throw InvalidInput("segment endpoints differ in degree: " + to_string(a_) + " vs " + to_string(b_));
    if (a_.lead() != 1 || b_.lead() != 1) throw InvalidInput("segment endpoints must be monic");
  }

  const Poly& end_a() const { return a_; }
  const Poly& end_b() const { return b_; }
  std::size_t degree() const { return a_.degree_or_throw(); }

  Poly at(const Rational& lambda) const { return a_ * lambda + b_ * Rational(1 - lambda); }

 private:
  Poly a_;
  Poly b_;
};

/// True iff lambda*A + (1-lambda)*B is Hurwitz for every lambda in [0, 1].
///
/// Both endpoints must pass Routh. Members are monic of fixed degree, so a
/// root can only leave the left half plane through the imaginary axis. With
/// p(jw) = E(t) + j w O(t), t = w^2, a crossing at (lambda, w != 0) needs
/// E_lambda(t) = O_lambda(t) = 0. Both are affine in lambda; their resultant in
/// lambda is W(t) = E_B O_A - O_B E_A. At a positive root t* of W the crossing
/// parameter lies in (0, 1) iff E_A(t*) E_B(t*) < 0, or both vanish and
/// O_A(t*) O_B(t*) < 0. Crossings at w = 0 are impossible since both constant
/// terms are positive. All signs at t* are decided exactly.
inline bool segment_stable(const Segment& seg) {
  if (seg.degree() == 0) throw InvalidInput("segment of constants");
  if (!hurwitz_stable(seg.end_a()) || !hurwitz_stable(seg.end_b())) return false;
  if (seg.end_a() == seg.end_b()) return true;

  auto [ea, oa] = even_odd_in_t(seg.end_a());
  auto [eb, ob] = even_odd_in_t(seg.end_b());
  const Poly w = eb * oa - ob * ea;
  const Poly prod_e = ea * eb;

  if (w.is_zero()) {
    // Every t is a common root candidate: unstable iff E_A E_B < 0 somewhere on
    // t > 0 (a point where both vanish forces O_A O_B < 0 check as well).
    const Poly prod_o = oa * ob;
    if (prod_e.is_zero()) return !(prod_o.is_zero() || positive_on_half_line(prod_o));
    const Poly sf = squarefree_part(prod_e);
    std::vector<Rational> probes{Rational(1)};
    Rational prev = 0;
    auto roots = isolate_roots(sf, Rational(0), cauchy_root_bound(sf));
    for (auto iv : roots) {
      iv = refine_root(sf, iv, Rational(1, 1024));
      probes.push_back((prev + iv.lo) / 2);
      prev = iv.hi;
      if (sign_at_root(prod_o, sf, iv) < 0 && sign_at_root(ea, sf, iv) == 0 && sign_at_root(eb, sf, iv) == 0)
        return false;
    }
    probes.push_back(prev + 1);
    for (const auto& t : probes)
      if (t > 0 && prod_e(t) < 0) return false;
    return true;
  }

  if (w.degree_or_throw() == 0) return true;
  const Poly sf = squarefree_part(w);
  for (const auto& iv : isolate_roots(sf, Rational(0), cauchy_root_bound(sf))) {
    int se = sign_at_root(prod_e, sf, iv);
    if (se < 0) return false;
    if (se == 0 && sign_at_root(ea, sf, iv) == 0 && sign_at_root(eb, sf, iv) == 0 &&
        sign_at_root(oa * ob, sf, iv) < 0)
      return false;
  }
  return true;
}

}  // namespace sprsynth
