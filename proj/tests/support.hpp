#pragma once

// Fixtures shared by the unit tests and the acceptance binary: the four worked
// families, seeded random generators, and floating-point oracles that are
// independent of the exact library code.

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "sprsynth/sprsynth.hpp"

namespace sprsynth {

// Readable gtest failure output.
template <typename T>
void PrintTo(const Polynomial<T>& p, std::ostream* os) {
  *os << to_string(p);
}
template <typename T>
void PrintTo(const Point2T<T>& p, std::ostream* os) {
  *os << "(" << p.x << ", " << p.y << ")";
}

}  // namespace sprsynth

namespace sprsynth::fixtures {

inline Rational R(const char* s) { return parse_rational(s); }
inline Poly P(const char* s) { return parse_polynomial(s); }

inline IntervalQuartic example1() { return IntervalQuartic({R("11"), R("56"), R("88"), R("1")}, {R("89"), R("56"), R("88"), R("50")}); }
inline IntervalQuartic example2() { return IntervalQuartic({R("2"), R("6"), R("4"), R("0.5")}, {R("5"), R("6"), R("6"), R("1")}); }
inline IntervalQuartic example3() { return IntervalQuartic({R("2"), R("5"), R("4"), R("0.5")}, {R("2.5"), R("6"), R("6"), R("5")}); }
inline std::vector<Poly> example4_vertices() {
  return {P("s^3+2.6s^2+37s+64"), P("s^3+17s^2+83s+978"), P("s^3+15s^2+28s+415")};
}

inline std::vector<Poly> vertex_list(const IntervalQuartic& k) {
  auto v = kharitonov_vertices(k);
  return {v.begin(), v.end()};
}

// ---- random generation -----------------------------------------------------

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  /// Uniform on the grid lo + k/den within [lo, hi].
  Rational rational(long lo, long hi, long den = 8) {
    std::uniform_int_distribution<long> d(lo * den, hi * den);
    return make_rational(d(rng_), den);
  }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::mt19937_64& engine() { return rng_; }

  /// Monic quartic with coefficients in [1, 100], rejection-sampled for stability.
  Poly stable_quartic() {
    while (true) {
      Poly p = monic_quartic(rational(1, 100), rational(1, 100), rational(1, 100), rational(1, 100));
      if (hurwitz_stable(p)) return p;
    }
  }

  /// Interval family with bounds in [1, 100], rejection-sampled for robust stability.
  IntervalQuartic stable_family() {
    while (true) {
      std::array<Rational, 4> lo, hi;
      for (std::size_t i = 0; i < 4; ++i) {
        Rational a = rational(1, 100), b = rational(1, 100);
        lo[i] = std::min(a, b);
        hi[i] = std::max(a, b);
      }
      IntervalQuartic k(lo, hi);
      if (interval_robustly_stable(k)) return k;
    }
  }

  /// Random member of an interval family.
  Poly member(const IntervalQuartic& k) {
    std::array<Rational, 4> u;
    for (auto& x : u) x = make_rational(integer(0, 1024), 1024);
    return k.member(u);
  }

  /// Segment between two random stable quartics, rejection-sampled for stability.
  Segment stable_segment() {
    while (true) {
      Poly a = stable_quartic(), b = stable_quartic();
      Segment s(a, b);
      if (segment_stable(s)) return s;
    }
  }

 private:
  std::mt19937_64 rng_;
};

// ---- floating-point oracles ------------------------------------------------

/// Largest real part among the roots, from the companion matrix eigenvalues.
inline double max_root_real_part(const Poly& p) {
  const auto pd = p.cast<double>();
  const std::size_t n = p.degree_or_throw();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 1; i < n; ++i) c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) = -pd.coeff(i) / pd.lead();
  const Eigen::VectorXcd ev = c.eigenvalues();
  double m = -1e300;
  for (Eigen::Index i = 0; i < ev.size(); ++i) m = std::max(m, ev[i].real());
  return m;
}

inline std::complex<double> eval_complex(const Poly& p, std::complex<double> s) {
  std::complex<double> v(0.0, 0.0);
  for (std::size_t k = p.coeffs().size(); k-- > 0;) v = v * s + to_double(p.coeffs()[k]);
  return v;
}

}  // namespace sprsynth::fixtures
