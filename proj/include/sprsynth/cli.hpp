#pragma once

// Command-line front end. `run` executes one job and returns the process exit
// status: 0 on success, 2 for malformed input or failed preconditions, 1 for
// internal contradictions. Results go to the output channel; error objects
// ({"error": {...}}) go to the error stream.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "sprsynth/io.hpp"
#include "sprsynth/svg.hpp"

namespace sprsynth::cli {

using io::json;

inline constexpr std::array<std::string_view, 6> kCommands{"synth-interval", "synth-segment", "verify",
                                                           "stability",      "plot-regions",  "probe"};

struct JobSpec {
  std::string command;
  /// Inline JSON (first non-blank character '{' or '['), a file path, or "-" / empty for stdin.
  std::string input;
  /// File path; empty writes to the output stream passed to run().
  std::string output;
  std::string epsilon_fraction = "0.5";
  std::string r_fraction = "0.5";
  std::size_t freq_samples = 512;
  std::size_t plot_resolution = 256;
  std::string format = "json";
};

/// Failed precondition that names the offending family member.
struct VertexFailure : PreconditionError {
  VertexFailure(std::string what, std::string vertex_name, std::string poly)
      : PreconditionError(std::move(what)), vertex(std::move(vertex_name)), polynomial(std::move(poly)) {}
  std::string vertex;
  std::string polynomial;
};

namespace detail {

inline std::string read_input(const std::string& input, std::istream& in) {
  const auto first = input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (input[first] == '{' || input[first] == '[')) return input;
  if (input.empty() || input == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(input, std::ios::binary);
  if (!f) throw InvalidInput("cannot open input file '" + input + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline void require_object(const json& j, std::initializer_list<const char*> keys, const std::string& command) {
  if (!j.is_object()) throw InvalidInput(command + " expects a JSON object");
  for (const char* k : keys)
    if (!j.contains(k)) throw InvalidInput(command + " input is missing \"" + k + "\"");
}

inline void check_interval_stable(const IntervalQuartic& k) {
  if (int bad = first_unstable_vertex(k); bad >= 0) {
    const auto v = kharitonov_vertices(k)[static_cast<std::size_t>(bad)];
    const std::string name = "a" + std::to_string(bad + 1) + "(s)";
    throw VertexFailure("family is not robustly stable: Kharitonov vertex " + name + " = " + to_string(v) +
                            " is not Hurwitz",
                        name, to_string(v));
  }
}

inline std::string rational_text(const Rational& q) {
  std::string exact = to_exact_string(q), dec = to_decimal_string(q, 12);
  return exact == dec ? exact : exact + " (~" + dec + ")";
}

inline std::string verdict_text(const SprVerdict& v) {
  std::string s = v.is_spr ? "SPR" : "not SPR";
  s += " [" + std::string(to_string(v.reason)) + "]";
  if (v.witness_t) s += " witness t = " + rational_text(*v.witness_t);
  return s;
}

inline std::string synthesis_text(const SynthesisResult& r) {
  std::ostringstream s;
  s << "construction: " << r.construction << "\n"
    << "point: x = " << rational_text(r.point.x) << ", y = " << rational_text(r.point.y) << "\n"
    << "epsilon = " << rational_text(r.epsilon) << " (max " << rational_text(r.epsilon_max)
    << (r.epsilon_capped ? ", capped" : "") << ")\n"
    << "r = " << rational_text(r.r) << " (max " << rational_text(r.r_max) << (r.r_capped ? ", capped" : "")
    << ")\n"
    << "numerator: " << to_string(r.numerator) << "\n";
  for (std::size_t i = 0; i < r.vertices.size(); ++i)
    s << "a" << i + 1 << "(s) = " << to_string(r.vertices[i]) << ": " << verdict_text(r.verdicts[i]) << "\n";
  return s.str();
}

inline SynthesisOptions synthesis_options(const JobSpec& job) {
  SynthesisOptions opt;
  opt.epsilon_fraction = parse_rational(job.epsilon_fraction);
  opt.r_fraction = parse_rational(job.r_fraction);
  if (opt.epsilon_fraction <= 0 || opt.epsilon_fraction > 1)
    throw InvalidInput("--epsilon-fraction must lie in (0, 1]");
  if (opt.r_fraction <= 0 || opt.r_fraction > 1) throw InvalidInput("--r-fraction must lie in (0, 1]");
  return opt;
}

struct Output {
  json data;
  std::string text;  // used for --format text, or raw (SVG) output when `raw` is set
  bool raw = false;
};

inline Output synth_interval(const JobSpec& job, const json& in) {
  require_object(in, {"lower", "upper"}, job.command);
  const auto opt = synthesis_options(job);
  const auto k = io::interval_from_json(in);
  check_interval_stable(k);
  const auto r = synthesize_interval(k, opt);
  return {io::to_json(r), synthesis_text(r)};
}

inline Output synth_segment(const JobSpec& job, const json& in) {
  require_object(in, {"endA", "endB"}, job.command);
  const auto opt = synthesis_options(job);
  const auto r = synthesize_segment(io::segment_from_json(in), opt);
  return {io::to_json(r), synthesis_text(r)};
}

inline Output verify(const JobSpec& job, const json& in) {
  require_object(in, {"numerator"}, job.command);
  const Poly b = io::poly_from_json(in.at("numerator"));
  std::vector<Poly> dens;
  if (in.contains("denominators")) dens = io::polys_from_json(in.at("denominators"));
  if (in.contains("denominator")) dens.push_back(io::poly_from_json(in.at("denominator")));
  if (dens.empty()) throw InvalidInput("verify input needs \"denominator\" or \"denominators\"");
  for (const auto& d : dens)
    if (d.is_zero()) throw InvalidInput("denominator is the zero polynomial");
  if (b.is_zero()) throw InvalidInput("numerator is the zero polynomial");
  FamilyCertificate cert;
  cert.family_spr = true;
  for (const auto& d : dens) {
    cert.per_vertex.push_back(is_spr(b, d));
    cert.family_spr = cert.family_spr && cert.per_vertex.back().is_spr;
  }
  json data = io::to_json(cert);
  data["numerator"] = io::to_json(b);
  std::ostringstream s;
  s << "numerator: " << to_string(b) << "\n";
  for (std::size_t i = 0; i < dens.size(); ++i)
    s << "denominator " << to_string(dens[i]) << ": " << verdict_text(cert.per_vertex[i]) << "\n";
  s << "family SPR: " << (cert.family_spr ? "yes" : "no") << "\n";
  return {data, s.str()};
}

inline Output stability(const JobSpec& job, const json& in) {
  if (!in.is_object()) throw InvalidInput(job.command + " expects a JSON object");
  if (in.contains("lower")) {
    const auto k = io::interval_from_json(in);
    check_interval_stable(k);
    json verts = json::array();
    std::ostringstream s;
    int i = 0;
    for (const auto& v : kharitonov_vertices(k)) {
      verts.push_back(io::to_json(v));
      s << "a" << ++i << "(s) = " << to_string(v) << ": Hurwitz\n";
    }
    s << "interval family is robustly stable\n";
    return {{{"kind", "interval"}, {"robustly_stable", true}, {"vertices", verts}}, s.str()};
  }
  if (in.contains("endA")) {
    const auto seg = io::segment_from_json(in);
    if (!segment_stable(seg)) throw PreconditionError("segment is not robustly Hurwitz stable");
    return {{{"kind", "segment"}, {"robustly_stable", true}}, "segment is robustly stable\n"};
  }
  if (in.contains("polynomial")) {
    const Poly p = io::poly_from_json(in.at("polynomial"));
    if (!hurwitz_stable(p))
      throw VertexFailure("polynomial " + to_string(p) + " is not Hurwitz", "polynomial", to_string(p));
    return {{{"kind", "polynomial"}, {"hurwitz", true}, {"polynomial", io::to_json(p)}}, to_string(p) + ": Hurwitz\n"};
  }
  throw InvalidInput("stability input needs \"lower\"/\"upper\", \"endA\"/\"endB\" or \"polynomial\"");
}

inline Output plot_regions(const JobSpec& job, const json& in) {
  if (!in.is_object()) throw InvalidInput(job.command + " expects a JSON object");
  std::vector<Poly> vertices;
  std::vector<svg::Chord> chords;
  std::optional<Point2> point;
  if (in.contains("point")) point = io::point_from_json(in.at("point"));
  if (in.contains("lower")) {
    const auto k = io::interval_from_json(in);
    check_interval_stable(k);
    const auto v = kharitonov_vertices(k);
    vertices.assign(v.begin(), v.end());
    chords = svg::constructive_segments(k.lo(1), k.hi(1), k.lo(3), k.hi(3), k.hi(4));
    if (!point) point = feasible_point_interval(v).point;
  } else if (in.contains("endA")) {
    const auto seg = io::segment_from_json(in);
    vertices = {seg.end_a(), seg.end_b()};
    if (!point) point = feasible_point_segment(seg.end_a(), seg.end_b()).point;
  } else if (in.contains("vertices")) {
    vertices = io::polys_from_json(in.at("vertices"));
  } else {
    throw InvalidInput("plot-regions input needs an interval family, a segment or \"vertices\"");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].degree() != 4u || vertices[i].lead() != 1 || !hurwitz_stable(vertices[i]))
      throw VertexFailure("vertex " + std::to_string(i + 1) + " is not a monic Hurwitz quartic",
                          "a" + std::to_string(i + 1) + "(s)", to_string(vertices[i]));
  svg::PlotOptions opt;
  opt.resolution = job.plot_resolution;
  Output o;
  o.text = svg::plot_regions(vertices, chords, point, opt);
  o.raw = true;
  return o;
}

inline Output probe(const JobSpec& job, const json& in) {
  require_object(in, {"numerator_degree"}, job.command);
  std::vector<Poly> vertices;
  if (in.contains("vertices")) {
    vertices = io::polys_from_json(in.at("vertices"));
  } else if (in.contains("lower")) {
    const auto k = io::interval_from_json(in);
    check_interval_stable(k);
    const auto v = kharitonov_vertices(k);
    vertices.assign(v.begin(), v.end());
  } else {
    throw InvalidInput("probe input needs \"vertices\" or an interval family");
  }
  const auto& nd = in.at("numerator_degree");
  if (!nd.is_number_unsigned()) throw InvalidInput("\"numerator_degree\" must be a nonnegative integer");
  ProbeOptions opt;
  opt.frequency_samples = job.freq_samples;
  const auto res = lp_probe(vertices, nd.get<std::size_t>(), opt);
  json data = io::to_json(res);
  data["numerator_degree"] = nd;
  data["frequency_samples"] = job.freq_samples;
  std::ostringstream s;
  s << "outcome: " << to_string(res.outcome) << "\nmargin: " << res.margin << "\n";
  if (res.candidate) s << "candidate: " << to_string(*res.candidate) << "\n";
  if (!res.certificate.empty()) s << "active sampled constraints: " << res.certificate.size() << "\n";
  return {data, s.str()};
}

inline json error_object(const std::string& type, const std::string& message) {
  return {{"error", {{"type", type}, {"message", message}}}};
}

}  // namespace detail

/// Executes one job. `in` supplies stdin input, `out` receives the result
/// when no output path is set, `err` receives error objects.
inline int run(const JobSpec& job, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
  auto fail = [&](int code, const json& e) {
    err << e.dump(2) << "\n";
    return code;
  };
  try {
    if (job.format != "json" && job.format != "text") throw InvalidInput("--format must be json or text");
    if (job.plot_resolution < 8) throw InvalidInput("--plot-resolution must be at least 8");
    if (job.freq_samples < 1) throw InvalidInput("--freq-samples must be positive");
    const json input = io::parse(detail::read_input(job.input, in));

    detail::Output o;
    if (job.command == "synth-interval") o = detail::synth_interval(job, input);
    else if (job.command == "synth-segment") o = detail::synth_segment(job, input);
    else if (job.command == "verify") o = detail::verify(job, input);
    else if (job.command == "stability") o = detail::stability(job, input);
    else if (job.command == "plot-regions") o = detail::plot_regions(job, input);
    else if (job.command == "probe") o = detail::probe(job, input);
    else throw InvalidInput("unknown command '" + job.command + "'");

    const std::string body = o.raw || job.format == "text" ? o.text : o.data.dump(2) + "\n";
    if (job.output.empty()) {
      out << body;
    } else {
      std::ofstream f(job.output, std::ios::binary);
      if (!f) throw InvalidInput("cannot open output file '" + job.output + "'");
      f << body;
    }
    return 0;
  } catch (const io::ParseError& e) {
    return fail(2, detail::error_object("parse-error", e.what()));
  } catch (const VertexFailure& e) {
    json j = detail::error_object("precondition", e.what());
    j["error"]["vertex"] = e.vertex;
    j["error"]["polynomial"] = e.polynomial;
    return fail(2, j);
  } catch (const PreconditionError& e) {
    return fail(2, detail::error_object("precondition", e.what()));
  } catch (const InvalidInput& e) {
    return fail(2, detail::error_object("invalid-input", e.what()));
  } catch (const json::exception& e) {
    return fail(2, detail::error_object("invalid-input", e.what()));
  } catch (const InternalContradiction& e) {
    return fail(1, detail::error_object("internal-contradiction", e.what()));
  } catch (const std::exception& e) {
    return fail(1, detail::error_object("internal-error", e.what()));
  }
}

/// Parses command-line arguments into a JobSpec and runs it.
inline int main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr,
                std::istream& in = std::cin) {
  CLI::App app{"Constructive SPR synthesis and verification for interval and segment polynomial families"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  JobSpec job;
  app.add_option("-i,--input", job.input, "Input JSON: inline text, a file path, or '-' for stdin");
  app.add_option("-o,--output", job.output, "Output file (default: stdout)");
  app.add_option("--epsilon-fraction", job.epsilon_fraction, "Fraction of the maximal eps to use")
      ->capture_default_str();
  app.add_option("--r-fraction", job.r_fraction, "Fraction of the maximal r to use")->capture_default_str();
  app.add_option("--freq-samples", job.freq_samples, "Frequency samples for the LP probe")->capture_default_str();
  app.add_option("--plot-resolution", job.plot_resolution, "Boundary samples per ellipse in plots")
      ->capture_default_str();
  app.add_option("--format", job.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  const std::array<const char*, 6> help{
      "Synthesize a numerator for a quartic interval family {lower, upper}",
      "Synthesize a numerator for a quartic segment {endA, endB}",
      "Check SPR of {numerator, denominator(s)}",
      "Check robust stability of an interval family, segment or polynomial",
      "Write an SVG of the feasible regions",
      "Run the frequency-sampled LP for {vertices | lower/upper, numerator_degree}"};
  for (std::size_t i = 0; i < kCommands.size(); ++i) app.add_subcommand(std::string(kCommands[i]), help[i]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  job.command = app.get_subcommands().front()->get_name();
  return run(job, out, err, in);
}

}  // namespace sprsynth::cli
