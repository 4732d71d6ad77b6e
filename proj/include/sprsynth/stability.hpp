#pragma once

// Hurwitz stability by the Routh table and the real-part numerator
// Re[p(jw) * conj(q(jw))] written as a polynomial in t = w^2.

#include <vector>

#include "sprsynth/polynomial.hpp"
#include "sprsynth/sturm.hpp"

namespace sprsynth {

/// True iff every root of p lies in the open left half plane. A zero in the
/// first column of the Routh table means "not Hurwitz"; no epsilon rows.
inline bool hurwitz_stable(const Poly& p) {
  if (p.is_zero() || p.degree_or_throw() == 0)
    throw InvalidInput("Hurwitz test needs degree >= 1, got " + to_string(p));
  const std::size_t n = p.degree_or_throw();
  const Rational orient = p.lead() > 0 ? Rational(1) : Rational(-1);

  // Row entries in descending powers: row0 = d0, d2, ...; row1 = d1, d3, ...
  const std::size_t width = n / 2 + 1;
  std::vector<Rational> upper(width + 1, Rational(0)), lower(width + 1, Rational(0));
  for (std::size_t i = 0; i <= n; ++i) {
    Rational c = orient * p.coeff(n - i);
    (i % 2 == 0 ? upper : lower)[i / 2] = c;
  }
  if (upper[0] <= 0 || lower[0] <= 0) return false;
  for (std::size_t row = 2; row <= n; ++row) {
    std::vector<Rational> next(width + 1, Rational(0));
    for (std::size_t j = 0; j < width; ++j)
      next[j] = (lower[0] * upper[j + 1] - upper[0] * lower[j + 1]) / lower[0];
    if (next[0] <= 0) return false;
    upper = std::move(lower);
    lower = std::move(next);
  }
  return true;
}

/// p(jw) = E(w^2) + j*w*O(w^2). Returns {E, O} as polynomials in t = w^2.
template <typename T>
std::pair<Polynomial<T>, Polynomial<T>> even_odd_in_t(const Polynomial<T>& p) {
  std::vector<T> even, odd;
  const auto c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    T v = (k / 2) % 2 == 0 ? T(c[k]) : T(-c[k]);
    if (k % 2 == 0)
      even.push_back(v);
    else
      odd.push_back(v);
  }
  return {Polynomial<T>(std::move(even)), Polynomial<T>(std::move(odd))};
}

/// N(t) with N(w^2) = Re[p(jw) * conj(q(jw))], i.e. the numerator of
/// Re[p(jw)/q(jw)] over the positive factor |q(jw)|^2.
struct EvenFormInT {
  Poly numerator;  // in t
  Poly p;
  Poly q;

  Rational operator()(const Rational& t) const { return numerator(t); }
};

template <typename T>
Polynomial<T> real_part_numerator_poly(const Polynomial<T>& p, const Polynomial<T>& q) {
  auto [pe, po] = even_odd_in_t(p);
  auto [qe, qo] = even_odd_in_t(q);
  return pe * qe + Polynomial<T>::monomial(T(1), 1) * po * qo;
}

inline EvenFormInT real_part_numerator(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) throw InvalidInput("real-part numerator of a zero polynomial");
  return {real_part_numerator_poly(p, q), p, q};
}

/// N(t) > 0 for all t in [0, +inf).
inline bool positive_on_nonneg(const EvenFormInT& n) { return positive_on_half_line(n.numerator); }
inline bool positive_on_nonneg(const Poly& n) { return positive_on_half_line(n); }

}  // namespace sprsynth
