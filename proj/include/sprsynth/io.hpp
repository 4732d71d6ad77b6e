#pragma once

// JSON encoding of the library's values. Numbers are read exactly: decimal
// literals in the input never pass through a double. Rationals are written as
// {"num": "...", "den": "...", "decimal": "..."}.

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "sprsynth/families.hpp"
#include "sprsynth/probe.hpp"
#include "sprsynth/spr.hpp"
#include "sprsynth/synth.hpp"

namespace sprsynth::io {

using nlohmann::json;

namespace detail {

// Builds an ordinary DOM, but stores every floating-point literal as its
// source text so it can be re-read as an exact rational.
class ExactNumberSax {
 public:
  explicit ExactNumberSax(json& root) : dom_(root, true) {}

  bool null() { return dom_.null(); }
  bool boolean(bool v) { return dom_.boolean(v); }
  bool number_integer(json::number_integer_t v) { return dom_.number_integer(v); }
  bool number_unsigned(json::number_unsigned_t v) { return dom_.number_unsigned(v); }
  bool number_float(json::number_float_t, const std::string& lexeme) {
    std::string copy = lexeme;
    return dom_.string(copy);
  }
  bool string(std::string& s) { return dom_.string(s); }
  bool binary(json::binary_t& b) { return dom_.binary(b); }
  bool start_object(std::size_t n) { return dom_.start_object(n); }
  bool key(std::string& k) { return dom_.key(k); }
  bool end_object() { return dom_.end_object(); }
  bool start_array(std::size_t n) { return dom_.start_array(n); }
  bool end_array() { return dom_.end_array(); }
  bool parse_error(std::size_t pos, const std::string& token, const nlohmann::detail::exception& ex) {
    return dom_.parse_error(pos, token, ex);
  }

 private:
  nlohmann::detail::json_sax_dom_parser<json> dom_;
};

}  // namespace detail

/// Thrown for malformed JSON text (distinct from semantic InvalidInput).
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

inline json parse(std::string_view text) {
  json root;
  detail::ExactNumberSax sax(root);
  try {
    json::sax_parse(text, &sax);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return root;
}

// ---- rationals -------------------------------------------------------------

inline json to_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}, {"decimal", to_decimal_string(q, 15)}};
}

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(mpz_class(j.dump()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    Rational q(mpz_class(j.at("num").get<std::string>()), mpz_class(j.at("den").get<std::string>()));
    if (q.get_den() == 0) throw InvalidInput("zero denominator");
    q.canonicalize();
    return q;
  }
  throw InvalidInput("expected a number, a numeric string or {num, den}, got " + j.dump());
}

// ---- polynomials -----------------------------------------------------------

inline json to_json(const Poly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return {{"ascending", coeffs}, {"text", to_string(p)}};
}

/// Accepts an ascending coefficient array, a descending human string, or an
/// object with an "ascending" array.
inline Poly poly_from_json(const json& j) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>());
  const json& arr = j.is_object() && j.contains("ascending") ? j.at("ascending") : j;
  if (!arr.is_array()) throw InvalidInput("expected a polynomial, got " + j.dump());
  std::vector<Rational> c;
  for (const auto& e : arr) c.push_back(rational_from_json(e));
  return Poly(std::move(c));
}

inline std::vector<Poly> polys_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of polynomials");
  std::vector<Poly> out;
  for (const auto& e : j) out.push_back(poly_from_json(e));
  return out;
}

// ---- families --------------------------------------------------------------

inline json to_json(const IntervalQuartic& k) {
  json lo = json::array(), hi = json::array();
  for (const auto& v : k.lower()) lo.push_back(to_json(v));
  for (const auto& v : k.upper()) hi.push_back(to_json(v));
  return {{"degree", 4}, {"lower", lo}, {"upper", hi}};
}

inline IntervalQuartic interval_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lower") || !j.contains("upper"))
    throw InvalidInput("interval family needs \"lower\" and \"upper\"");
  if (j.contains("degree") && rational_from_json(j.at("degree")) != 4)
    throw InvalidInput("only degree-4 interval families are supported");
  auto read4 = [](const json& a, const char* name) {
    if (!a.is_array() || a.size() != 4) throw InvalidInput(std::string("\"") + name + "\" must hold four bounds");
    return std::array<Rational, 4>{rational_from_json(a[0]), rational_from_json(a[1]), rational_from_json(a[2]),
                                   rational_from_json(a[3])};
  };
  return IntervalQuartic(read4(j.at("lower"), "lower"), read4(j.at("upper"), "upper"));
}

inline json to_json(const Segment& s) { return {{"endA", to_json(s.end_a())}, {"endB", to_json(s.end_b())}}; }

inline Segment segment_from_json(const json& j) {
  if (!j.is_object() || !j.contains("endA") || !j.contains("endB"))
    throw InvalidInput("segment needs \"endA\" and \"endB\"");
  return Segment(poly_from_json(j.at("endA")), poly_from_json(j.at("endB")));
}

// ---- verdicts and results --------------------------------------------------

inline json to_json(const SprVerdict& v) {
  return {{"is_spr", v.is_spr},
          {"reason", std::string(to_string(v.reason))},
          {"witness_t", v.witness_t ? json(to_exact_string(*v.witness_t)) : json(nullptr)}};
}

inline SprVerdict verdict_from_json(const json& j) {
  SprVerdict v;
  v.is_spr = j.at("is_spr").get<bool>();
  v.reason = parse_spr_reason(j.at("reason").get<std::string>());
  if (!j.at("witness_t").is_null()) v.witness_t = rational_from_json(j.at("witness_t"));
  return v;
}

inline json to_json(const Point2& p) { return {{"x", to_json(p.x)}, {"y", to_json(p.y)}}; }

inline Point2 point_from_json(const json& j) {
  if (j.is_array() && j.size() == 2) return {rational_from_json(j[0]), rational_from_json(j[1])};
  return {rational_from_json(j.at("x")), rational_from_json(j.at("y"))};
}

inline json to_json(const SynthesisResult& r) {
  json verts = json::array(), verdicts = json::array();
  for (const auto& v : r.vertices) verts.push_back(to_json(v));
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  return {{"kind", "synthesis-result"},
          {"construction", r.construction},
          {"point", to_json(r.point)},
          {"epsilon", to_json(r.epsilon)},
          {"epsilon_max", to_json(r.epsilon_max)},
          {"epsilon_capped", r.epsilon_capped},
          {"r", to_json(r.r)},
          {"r_max", to_json(r.r_max)},
          {"r_capped", r.r_capped},
          {"numerator", to_json(r.numerator)},
          {"vertices", verts},
          {"verdicts", verdicts},
          {"all_spr", r.all_spr()}};
}

inline SynthesisResult synthesis_from_json(const json& j) {
  SynthesisResult r;
  r.construction = j.at("construction").get<std::string>();
  r.point = point_from_json(j.at("point"));
  r.epsilon = rational_from_json(j.at("epsilon"));
  r.epsilon_max = rational_from_json(j.at("epsilon_max"));
  r.epsilon_capped = j.value("epsilon_capped", false);
  r.r = rational_from_json(j.at("r"));
  r.r_max = rational_from_json(j.at("r_max"));
  r.r_capped = j.value("r_capped", false);
  r.numerator = poly_from_json(j.at("numerator"));
  r.vertices = polys_from_json(j.at("vertices"));
  for (const auto& v : j.at("verdicts")) r.verdicts.push_back(verdict_from_json(v));
  return r;
}

inline json to_json(const FamilyCertificate& c) {
  json verdicts = json::array();
  for (const auto& v : c.per_vertex) verdicts.push_back(to_json(v));
  return {{"family_spr", c.family_spr}, {"verdicts", verdicts}};
}

inline json to_json(const ProbeResult& p) {
  json cert = json::array();
  for (const auto& m : p.certificate) cert.push_back({{"vertex", m.vertex}, {"omega", m.omega}, {"weight", m.weight}});
  return {{"outcome", std::string(to_string(p.outcome))},
          {"margin", p.margin},
          {"candidate", p.candidate ? to_json(*p.candidate) : json(nullptr)},
          {"certificate", cert}};
}

}  // namespace sprsynth::io
