#pragma once

// Feasible regions in the (x, y) plane for the cubic c(s) = s^3 + x s^2 + y s + eps
// against a monic Hurwitz quartic a(s) = s^4 + a1 s^3 + a2 s^2 + a3 s + a4.
//
//   ellipse  Q(x, y) = (a2^2 - 4a4) x^2 + 2(2a3 - a1 a2) xy + a1^2 y^2
//                      - 2(a2 a3 - 2 a1 a4) x - 2 a1 a3 y + a3^2
//   omega_e  = { Q < 0 }
//   omega_t  = { a1 - x >= 0, a2 x - a1 y - a3 >= 0, a3 y - a4 x > 0 }
//   omega    = omega_e U omega_t
//
// Q is the discriminant of q(t) = (a1 - x) t^2 + (a2 x - a1 y - a3) t + (a3 y - a4 x),
// so omega is also the set where q > 0 on [0, +inf).

#include <array>
#include <cmath>
#include <vector>

#include "sprsynth/stability.hpp"

namespace sprsynth {

template <typename T>
struct Point2T {
  T x;
  T y;
  friend bool operator==(const Point2T&, const Point2T&) = default;
};
using Point2 = Point2T<Rational>;
using Point2D = Point2T<double>;

/// A x^2 + B xy + C y^2 + D x + E y + F = 0
template <typename T>
struct ConicT {
  T A, B, C, D, E, F;

  T operator()(const Point2T<T>& p) const {
    return A * p.x * p.x + B * p.x * p.y + C * p.y * p.y + D * p.x + E * p.y + F;
  }

  T discriminant() const { return B * B - 4 * A * C; }

  /// Stationary point of the quadratic form (the ellipse center).
  Point2T<T> center() const {
    T det = 4 * A * C - B * B;
    if (det == T(0)) throw InvalidInput("degenerate conic has no center");
    return {T((B * E - 2 * C * D) / det), T((B * D - 2 * A * E) / det)};
  }

  template <typename U>
  ConicT<U> cast() const {
    return {U(to_double(A)), U(to_double(B)), U(to_double(C)), U(to_double(D)), U(to_double(E)), U(to_double(F))};
  }
};
using Conic = ConicT<Rational>;

/// Coefficients a1..a4 of a monic Hurwitz quartic; throws otherwise.
struct QuarticCoeffs {
  Rational a1, a2, a3, a4;

  static QuarticCoeffs of(const Poly& a) {
    if (a.degree() != 4u || a.lead() != 1) throw InvalidInput("expected a monic quartic, got " + to_string(a));
    if (!hurwitz_stable(a)) throw InvalidInput("quartic is not Hurwitz stable: " + to_string(a));
    return {a.coeff(3), a.coeff(2), a.coeff(1), a.coeff(0)};
  }
};

inline Conic conic_of(const QuarticCoeffs& c) {
  const auto& [a1, a2, a3, a4] = c;
  Conic k{a2 * a2 - 4 * a4,           2 * (2 * a3 - a1 * a2), a1 * a1,
          -2 * (a2 * a3 - 2 * a1 * a4), -2 * a1 * a3,          a3 * a3};
  if (k.discriminant() >= 0) throw InternalContradiction("conic of a Hurwitz quartic is not an ellipse");
  return k;
}

inline Conic conic_of(const Poly& a) { return conic_of(QuarticCoeffs::of(a)); }

/// The three points where the ellipse touches x = 0, x = a1 and a3 y - a4 x = 0.
inline std::array<Point2, 3> tangent_points(const QuarticCoeffs& c) {
  const auto& [a1, a2, a3, a4] = c;
  const Rational d = a2 * a3 - a1 * a4;
  if (d <= 0) throw InternalContradiction("a2 a3 - a1 a4 must be positive for a Hurwitz quartic");
  return {Point2{Rational(0), Rational(a3 / a1)}, Point2{a1, Rational(a2 - a3 / a1)},
          Point2{Rational(a3 * a3 / d), Rational(a3 * a4 / d)}};
}

inline std::array<Point2, 3> tangent_points(const Poly& a) { return tangent_points(QuarticCoeffs::of(a)); }

/// The three affine forms bounding omega_t, evaluated at p.
inline std::array<Rational, 3> triangle_forms(const QuarticCoeffs& c, const Point2& p) {
  const auto& [a1, a2, a3, a4] = c;
  return {Rational(a1 - p.x), Rational(a2 * p.x - a1 * p.y - a3), Rational(a3 * p.y - a4 * p.x)};
}

/// Corners of omega_t: (a1, a2 - a3/a1), (a1, a1 a4 / a3) and the third tangent point.
inline std::array<Point2, 3> triangle_vertices(const QuarticCoeffs& c) {
  auto t = tangent_points(c);
  return {t[1], Point2{c.a1, Rational(c.a1 * c.a4 / c.a3)}, t[2]};
}

/// Everything derived from one quartic, computed once.
struct RegionBundle {
  Poly source;
  QuarticCoeffs coeffs;
  Conic conic;
  std::array<Point2, 3> tangents;

  explicit RegionBundle(const Poly& a)
      : source(a), coeffs(QuarticCoeffs::of(a)), conic(conic_of(coeffs)), tangents(tangent_points(coeffs)) {}

  bool in_omega_e(const Point2& p) const { return conic(p) < 0; }

  bool in_omega_t(const Point2& p) const {
    auto f = triangle_forms(coeffs, p);
    return f[0] >= 0 && f[1] >= 0 && f[2] > 0;
  }

  bool in_omega(const Point2& p) const { return in_omega_e(p) || in_omega_t(p); }

  /// q(t) = (a1 - x) t^2 + (a2 x - a1 y - a3) t + (a3 y - a4 x)
  Poly membership_quadratic(const Point2& p) const {
    auto f = triangle_forms(coeffs, p);
    return Poly{f[2], f[1], f[0]};
  }

  bool in_omega_quadratic(const Point2& p) const {
    Poly q = membership_quadratic(p);
    return !q.is_zero() && positive_on_nonneg(q);
  }
};

inline bool in_omega_e(const Poly& a, const Point2& p) { return RegionBundle(a).in_omega_e(p); }
inline bool in_omega_t(const Poly& a, const Point2& p) { return RegionBundle(a).in_omega_t(p); }
inline bool in_omega(const Poly& a, const Point2& p) { return RegionBundle(a).in_omega(p); }
inline bool in_omega_quadratic(const Poly& a, const Point2& p) { return RegionBundle(a).in_omega_quadratic(p); }

/// u v^2 - a1 v^2 - a2 u v + a3 v + a4 u. Zero iff the line x/u + y/v = 1 is
/// tangent to the ellipse. Affine in (a1, a2, a3, a4) and in u:
///   residual = u (v^2 - a2 v + a4) + (a3 v - a1 v^2).
inline Rational tangent_residual(const QuarticCoeffs& c, const Rational& u, const Rational& v) {
  if (u == 0) throw InvalidInput("tangent line intercept u must be nonzero");
  return u * (v * v - c.a2 * v + c.a4) + (c.a3 * v - c.a1 * v * v);
}

inline Rational tangent_residual(const Poly& a, const Rational& u, const Rational& v) {
  return tangent_residual(QuarticCoeffs::of(a), u, v);
}

/// Second intersection of the line anchor + tau * dir with the conic, where
/// `anchor` lies on the conic. Returns the anchor itself for tangent directions.
template <typename T>
Point2T<T> boundary_point(const ConicT<T>& k, const Point2T<T>& anchor, const T& dx, const T& dy) {
  T grad = (2 * k.A * anchor.x + k.B * anchor.y + k.D) * dx + (k.B * anchor.x + 2 * k.C * anchor.y + k.E) * dy;
  T quad = k.A * dx * dx + k.B * dx * dy + k.C * dy * dy;
  if (quad == T(0)) return anchor;
  T tau = -grad / quad;
  return {T(anchor.x + tau * dx), T(anchor.y + tau * dy)};
}

/// Closed polyline of `samples` boundary points, swept by chord direction
/// through the tangent point on the y axis.
inline std::vector<Point2D> sample_ellipse(const QuarticCoeffs& c, std::size_t samples) {
  const auto k = conic_of(c).cast<double>();
  const Point2D anchor{0.0, to_double(c.a3 / c.a1)};
  std::vector<Point2D> out;
  out.reserve(samples);
  const double pi = std::acos(-1.0);
  for (std::size_t i = 0; i < samples; ++i) {
    double theta = -pi / 2 + pi * static_cast<double>(i) / static_cast<double>(samples);
    out.push_back(boundary_point(k, anchor, std::cos(theta), std::sin(theta)));
  }
  return out;
}

}  // namespace sprsynth
