#pragma once

// Strict positive realness of p(s)/q(s): biproper, q Hurwitz, and
// Re[p(jw)/q(jw)] > 0 for every real w.

#include <optional>
#include <string_view>
#include <vector>

#include "sprsynth/stability.hpp"

namespace sprsynth {

enum class SprReason { Ok, NotBiproper, DenominatorNotHurwitz, RealPartNonpositive };

inline std::string_view to_string(SprReason r) {
  switch (r) {
    case SprReason::Ok: return "ok";
    case SprReason::NotBiproper: return "not-biproper";
    case SprReason::DenominatorNotHurwitz: return "denominator-not-hurwitz";
    case SprReason::RealPartNonpositive: return "real-part-nonpositive";
  }
  return "unknown";
}

inline SprReason parse_spr_reason(std::string_view s) {
  for (auto r : {SprReason::Ok, SprReason::NotBiproper, SprReason::DenominatorNotHurwitz, SprReason::RealPartNonpositive})
    if (to_string(r) == s) return r;
  throw InvalidInput("unknown SPR reason '" + std::string(s) + "'");
}

struct SprVerdict {
  bool is_spr = false;
  SprReason reason = SprReason::Ok;
  /// A t = w^2 >= 0 where the real-part numerator is not positive.
  std::optional<Rational> witness_t;

  friend bool operator==(const SprVerdict&, const SprVerdict&) = default;
};

inline bool denominator_hurwitz(const Poly& q) {
  return q.degree_or_throw() == 0 ? true : hurwitz_stable(q);
}

inline SprVerdict is_spr(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) throw InvalidInput("SPR test with a zero polynomial");
  if (p.degree() != q.degree()) return {false, SprReason::NotBiproper, std::nullopt};
  if (!denominator_hurwitz(q)) return {false, SprReason::DenominatorNotHurwitz, std::nullopt};
  const auto n = real_part_numerator(p, q);
  if (positive_on_nonneg(n)) return {true, SprReason::Ok, std::nullopt};
  return {false, SprReason::RealPartNonpositive, nonpositive_witness(n.numerator)};
}

/// Re[p(jw)/q(jw)] > 0 for all real w; the proper-case clause alone.
inline bool re_positive(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) throw InvalidInput("real-part test with a zero polynomial");
  if (p.degree_or_throw() > q.degree_or_throw()) throw PreconditionError("numerator degree exceeds denominator degree");
  if (!denominator_hurwitz(q)) throw PreconditionError("denominator is not Hurwitz: " + to_string(q));
  return positive_on_nonneg(real_part_numerator(p, q));
}

struct FamilyCertificate {
  std::vector<SprVerdict> per_vertex;
  bool family_spr = false;
};

/// SPR against each vertex. The real-part numerator is affine in the
/// denominator's coefficients, so a family-true verdict extends to the convex
/// hull of the vertices (and to the whole box for Kharitonov vertices).
inline FamilyCertificate vertex_certificate(const Poly& b, const std::vector<Poly>& vertices) {
  if (vertices.empty()) throw InvalidInput("vertex certificate needs at least one vertex");
  for (const auto& v : vertices) {
    if (v.is_zero()) throw InvalidInput("vertex is the zero polynomial");
    if (v.degree() != vertices.front().degree()) throw InvalidInput("vertices differ in degree");
  }
  FamilyCertificate out;
  out.family_spr = true;
  for (const auto& v : vertices) {
    out.per_vertex.push_back(is_spr(b, v));
    out.family_spr = out.family_spr && out.per_vertex.back().is_spr;
  }
  return out;
}

}  // namespace sprsynth
