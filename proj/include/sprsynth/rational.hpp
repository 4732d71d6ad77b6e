#pragma once

// Exact rational scalars built on GMP, plus the text conversions used at I/O
// boundaries (decimal literals in, "p/q" and decimal renderings out).

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <string>
#include <string_view>

#include "sprsynth/errors.hpp"

namespace sprsynth {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(double v) { return (v > 0) - (v < 0); }

/// Parses "12", "-7.6657", "3/4", "1.5e-3" as an exact rational.
/// Decimal fractions are taken digit-for-digit, never through a double.
inline Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InvalidInput("empty number");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Rational num = parse_rational(s.substr(0, slash));
    Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + s + "'");
    return Rational(num / den);
  }

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';

  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw InvalidInput("malformed number '" + s + "'");

  long exponent = 0;
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw InvalidInput("malformed number '" + s + "'");
    ++pos;
    std::string exp_text = s.substr(pos);
    if (exp_text.empty()) throw InvalidInput("malformed exponent in '" + s + "'");
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw InvalidInput("malformed exponent in '" + s + "'");
    }
    if (used != exp_text.size()) throw InvalidInput("malformed exponent in '" + s + "'");
  }

  mpz_class mantissa(digits, 10);
  long scale = exponent - frac_digits;
  if (scale > 100000 || scale < -100000) throw InvalidInput("exponent out of range in '" + s + "'");
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational q = scale < 0 ? Rational(mantissa, ten_pow) : Rational(mantissa * ten_pow);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

/// Canonical exact text: "p" for integers, "p/q" otherwise.
inline std::string to_exact_string(const Rational& q) { return q.get_str(); }

/// Exact decimal text when the denominator has only factors 2 and 5
/// ("7.6657"), otherwise "p/q".
inline std::string to_exact_decimal(const Rational& q) {
  mpz_class den = q.get_den();
  unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
  unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(5).get_mpz_t());
  if (den != 1) return q.get_str();
  unsigned long places = twos > fives ? twos : fives;
  if (places == 0) return q.get_num().get_str();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  mpz_class scaled = q.get_num() * scale / q.get_den();
  bool negative = scaled < 0;
  std::string digits = mpz_class(abs(scaled)).get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double v) { return v; }

/// Decimal rendering with `digits` significant digits, for humans.
inline std::string to_decimal_string(const Rational& q, int digits = 12) {
  if (q == 0) return "0";
  if (q.get_den() == 1) return q.get_num().get_str();
  mpf_class f(q, 256);
  mp_exp_t exp = 0;
  std::string mant = f.get_str(exp, 10, static_cast<std::size_t>(digits));
  bool negative = !mant.empty() && mant[0] == '-';
  if (negative) mant.erase(0, 1);
  std::string out;
  if (exp <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + mant;
  } else if (static_cast<std::size_t>(exp) >= mant.size()) {
    out = mant + std::string(static_cast<std::size_t>(exp) - mant.size(), '0');
  } else {
    out = mant.substr(0, static_cast<std::size_t>(exp)) + "." + mant.substr(static_cast<std::size_t>(exp));
  }
  return negative ? "-" + out : out;
}

/// Nearest dyadic rational k / 2^bits to a finite double.
inline Rational round_to_dyadic(double v, unsigned bits) {
  if (!std::isfinite(v)) throw InvalidInput("non-finite value cannot be rationalized");
  double scaled = std::ldexp(v, static_cast<int>(bits));
  mpz_class k(std::nearbyint(scaled));
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  Rational q(k, den);
  q.canonicalize();
  return q;
}

/// Exact rational value of a double (no rounding).
inline Rational exact_from_double(double v) {
  if (!std::isfinite(v)) throw InvalidInput("non-finite value cannot be rationalized");
  return Rational(v);
}

}  // namespace sprsynth
