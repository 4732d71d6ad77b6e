#pragma once

// Sturm chains over the rationals: distinct-root counting, root isolation,
// exact sign of a polynomial at an isolated algebraic root, and positivity on
// the half line [0, +inf).

#include <optional>
#include <utility>
#include <vector>

#include "sprsynth/polynomial.hpp"

namespace sprsynth {

/// Signed remainder sequence p, p', -rem(p, p'), ... Each member is rescaled by
/// the absolute value of its leading coefficient, which leaves every sign
/// pattern unchanged and keeps coefficient growth in check.
class SturmChain {
 public:
  explicit SturmChain(const Poly& p) {
    if (p.is_zero()) throw InvalidInput("Sturm chain of the zero polynomial");
    seq_.push_back(normalize(p));
    Poly d = p.derivative();
    if (d.is_zero()) return;
    seq_.push_back(normalize(d));
    while (true) {
      Poly r = -(seq_[seq_.size() - 2] % seq_.back());
      if (r.is_zero()) break;
      seq_.push_back(normalize(r));
    }
  }

  const std::vector<Poly>& sequence() const { return seq_; }

  int sign_changes_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const auto& s : seq_) signs.push_back(sign(s(x)));
    return count_changes(signs);
  }

  int sign_changes_at_pos_inf() const {
    std::vector<int> signs;
    for (const auto& s : seq_) signs.push_back(sign(s.lead()));
    return count_changes(signs);
  }

  int sign_changes_at_neg_inf() const {
    std::vector<int> signs;
    for (const auto& s : seq_) {
      int sg = sign(s.lead());
      signs.push_back(s.degree_or_throw() % 2 == 0 ? sg : -sg);
    }
    return count_changes(signs);
  }

  /// Number of distinct real roots in (lo, hi]. Endpoints may be roots only
  /// when the chain's polynomial is squarefree.
  int count_roots(const Rational& lo, const Rational& hi) const {
    return sign_changes_at(lo) - sign_changes_at(hi);
  }

  /// Number of distinct real roots in (lo, +inf). Exact at a root `lo` only
  /// when the chain's polynomial is squarefree.
  int count_roots_above(const Rational& lo) const { return sign_changes_at(lo) - sign_changes_at_pos_inf(); }

 private:
  static Poly normalize(const Poly& p) {
    Rational l = abs(p.lead());
    return p * Rational(1 / l);
  }

  static int count_changes(const std::vector<int>& signs) {
    int changes = 0;
    int last = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  std::vector<Poly> seq_;
};

/// Strict upper bound on the absolute value of every real root.
inline Rational cauchy_root_bound(const Poly& p) {
  const std::size_t n = p.degree_or_throw();
  Rational m = 0;
  for (std::size_t k = 0; k < n; ++k) {
    Rational r = abs(p.coeff(k) / p.lead());
    if (r > m) m = r;
  }
  return m + 1;
}

/// An interval (lo, hi] holding exactly one root of a squarefree polynomial.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Isolates the distinct real roots of `p` inside (lo, hi] by Sturm bisection.
/// Intervals are returned in increasing order.
inline std::vector<RootInterval> isolate_roots(const Poly& p, const Rational& lo, const Rational& hi) {
  const Poly sf = squarefree_part(p);
  const SturmChain chain(sf);
  std::vector<RootInterval> out;
  std::vector<std::pair<RootInterval, int>> stack{{{lo, hi}, chain.count_roots(lo, hi)}};
  while (!stack.empty()) {
    auto [iv, n] = stack.back();
    stack.pop_back();
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(iv);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    int left = chain.count_roots(iv.lo, mid);
    stack.push_back({{mid, iv.hi}, n - left});
    stack.push_back({{iv.lo, mid}, left});
  }
  return out;
}

/// Shrinks a root interval of squarefree `sf` to width at most `width`.
inline RootInterval refine_root(const Poly& sf, RootInterval iv, const Rational& width) {
  const SturmChain chain(sf);
  while (iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    if (sf(mid) == 0) return {mid - width / 4, mid};
    if (chain.count_roots(iv.lo, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  return iv;
}

/// Exact sign of `p` at the unique root of squarefree `sf` in (iv.lo, iv.hi].
inline int sign_at_root(const Poly& p, const Poly& sf, RootInterval iv) {
  if (p.is_zero()) return 0;
  const Poly g = gcd(sf, p);
  if (g.degree_or_throw() >= 1 && SturmChain(g).count_roots(iv.lo, iv.hi) > 0) return 0;
  if (p.degree_or_throw() == 0) return sign(p.lead());
  const SturmChain sf_chain(sf);
  const SturmChain p_chain(squarefree_part(p));
  while (p_chain.count_roots(iv.lo, iv.hi) > 0) {
    Rational mid = (iv.lo + iv.hi) / 2;
    if (sf(mid) == 0) return sign(p(mid));
    if (sf_chain.count_roots(iv.lo, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  return sign(p(iv.hi));
}

/// True iff p(t) > 0 for every t in [0, +inf). Decided exactly.
inline bool positive_on_half_line(const Poly& p) {
  if (p.is_zero()) throw InvalidInput("positivity test of the zero polynomial");
  if (p.coeff(0) <= 0) return false;
  if (p.lead() <= 0) return false;
  if (p.degree_or_throw() == 0) return true;
  return SturmChain(p).count_roots_above(Rational(0)) == 0;
}

/// Some t >= 0 with p(t) <= 0, when one exists with a rational value.
/// Roots of even multiplicity that are irrational admit no such rational t;
/// in that case the midpoint of a 2^-64-wide isolating interval is returned.
inline std::optional<Rational> nonpositive_witness(const Poly& p) {
  if (p.is_zero()) throw InvalidInput("positivity test of the zero polynomial");
  if (p.coeff(0) <= 0) return Rational(0);
  if (p.lead() < 0) {
    Rational t = cauchy_root_bound(p);
    while (p(t) >= 0) t *= 2;
    return t;
  }
  if (p.degree_or_throw() == 0) return std::nullopt;
  if (SturmChain(p).count_roots_above(Rational(0)) == 0) return std::nullopt;

  // Odd multiplicity: p changes sign across the root, so a bisection probe
  // lands on a nonpositive value.
  const Poly sf = squarefree_part(p);
  const SturmChain sf_chain(sf);
  for (RootInterval iv : isolate_roots(sf, Rational(0), cauchy_root_bound(sf))) {
    for (int i = 0; i < 256; ++i) {
      if (p(iv.hi) <= 0) return iv.hi;
      Rational mid = (iv.lo + iv.hi) / 2;
      if (p(mid) <= 0) return mid;
      if (sf_chain.count_roots(iv.lo, mid) == 1)
        iv.hi = mid;
      else
        iv.lo = mid;
    }
  }
  // Only even-multiplicity roots remain; they are roots of gcd(p, p').
  const Poly g = squarefree_part(gcd(p, p.derivative()));
  auto groots = isolate_roots(g, Rational(0), cauchy_root_bound(g));
  if (!groots.empty()) {
    if (g.degree_or_throw() == 1) return Rational(-g.coeff(0) / g.coeff(1));
    RootInterval fine = refine_root(g, groots.front(), Rational(1) / Rational(mpz_class(1) << 64));
    return Rational((fine.lo + fine.hi) / 2);
  }
  return std::nullopt;
}

}  // namespace sprsynth
