#pragma once

// Dense univariate polynomials over a field, coefficients stored ascending by
// power (index k holds the coefficient of s^k). Instantiated with Rational for
// every verdict and with double only in oracles and plotting.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sprsynth/errors.hpp"
#include "sprsynth/rational.hpp"

namespace sprsynth {

template <typename T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() = default;
  Polynomial(std::initializer_list<T> ascending) : coeffs_(ascending) { trim(); }
  explicit Polynomial(std::vector<T> ascending) : coeffs_(std::move(ascending)) { trim(); }

  /// c * s^k
  static Polynomial monomial(T c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

  bool is_zero() const { return coeffs_.empty(); }

  /// Index of the highest nonzero coefficient; none for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Degree, treating the zero polynomial as an error.
  std::size_t degree_or_throw() const {
    if (coeffs_.empty()) throw InvalidInput("zero polynomial has no degree");
    return coeffs_.size() - 1;
  }

  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
  std::span<const T> coeffs() const { return coeffs_; }
  T lead() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * T(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    std::vector<T> v(coeffs_);
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& c) { return a *= c; }
  friend Polynomial operator*(const T& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division over the field: a = q*b + r, deg r < deg b.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    std::vector<T> rem(a.coeffs_);
    const std::size_t db = b.coeffs_.size() - 1;
    if (rem.size() <= db) return {Polynomial{}, a};
    std::vector<T> quot(rem.size() - db, T(0));
    const T& lb = b.coeffs_.back();
    for (std::size_t k = rem.size(); k-- > db;) {
      T f = rem[k] / lb;
      quot[k - db] = f;
      if (f == T(0)) continue;
      for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs_[j];
    }
    rem.resize(db);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

  /// Divides by the leading coefficient.
  Polynomial monic() const {
    if (is_zero()) return {};
    return *this * (T(1) / lead());
  }

  /// Re-expresses coefficients in another scalar type.
  template <typename U>
  Polynomial<U> cast() const {
    std::vector<U> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(convert<U>(c));
    return Polynomial<U>(std::move(v));
  }

 private:
  template <typename U, typename V>
  static U convert(const V& v) {
    if constexpr (std::is_same_v<U, double>)
      return to_double(v);
    else
      return U(v);
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using Poly = Polynomial<Rational>;
using PolyD = Polynomial<double>;

/// Monic greatest common divisor (zero if both are zero).
template <typename T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'): same distinct roots, all simple.
template <typename T>
Polynomial<T> squarefree_part(const Polynomial<T>& p) {
  if (p.is_zero()) return p;
  auto g = gcd(p, p.derivative());
  if (g.degree_or_throw() == 0) return p;
  return divmod(p, g).first;
}

/// Descending human form, e.g. "s^4+89s^3+56s^2+88s+1".
template <typename T>
std::string to_string(const Polynomial<T>& p, char var = 's') {
  if (p.is_zero()) return "0";
  std::string out;
  const auto c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == T(0)) continue;
    T mag = c[k] < T(0) ? T(-c[k]) : c[k];
    bool negative = c[k] < T(0);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    std::string mag_text;
    if constexpr (std::is_same_v<T, Rational>)
      mag_text = to_exact_decimal(mag);
    else
      mag_text = std::to_string(mag);
    if (k == 0 || mag != T(1)) out += mag_text;
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

/// Parses the descending human form. Accepts '*' between coefficient and
/// variable, whitespace anywhere, repeated powers (summed) and decimal or
/// "p/q" coefficients, all read exactly.
inline Poly parse_polynomial(std::string_view text, char var = 's') {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InvalidInput("empty polynomial text");

  std::vector<Rational> acc;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw InvalidInput("expected '+' or '-' at position " + std::to_string(pos) + " in '" + s + "'");
    }
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.' || s[pos] == '/'))
      ++pos;
    Rational coeff = 1;
    bool has_coeff = pos > start;
    if (has_coeff) coeff = parse_rational(s.substr(start, pos - start));
    if (pos < s.size() && s[pos] == '*') {
      if (!has_coeff) throw InvalidInput("dangling '*' in '" + s + "'");
      ++pos;
    }
    std::size_t power = 0;
    if (pos < s.size() && s[pos] == var) {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t p0 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (p0 == pos) throw InvalidInput("missing exponent in '" + s + "'");
        power = std::stoul(s.substr(p0, pos - p0));
      }
    } else if (!has_coeff) {
      throw InvalidInput("malformed term at position " + std::to_string(start) + " in '" + s + "'");
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
      throw InvalidInput("unexpected character '" + std::string(1, s[pos]) + "' in '" + s + "'");
    if (acc.size() <= power) acc.resize(power + 1, Rational(0));
    acc[power] += negative ? Rational(-coeff) : coeff;
  }
  return Poly(std::move(acc));
}

}  // namespace sprsynth
