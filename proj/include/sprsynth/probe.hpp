#pragma once

// Frequency-sampled linear program asking whether a fixed numerator of a given
// degree can make Re[c(jw)/a_i(jw)] positive for every vertex a_i. The
// sampled system is a relaxation, so "infeasible" proves nonexistence; a
// feasible candidate is only reported as such after exact verification.

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "sprsynth/simplex.hpp"
#include "sprsynth/spr.hpp"

namespace sprsynth {

enum class ProbeOutcome { Feasible, Infeasible, InconclusiveFeasible };

inline std::string_view to_string(ProbeOutcome o) {
  switch (o) {
    case ProbeOutcome::Feasible: return "feasible";
    case ProbeOutcome::Infeasible: return "infeasible";
    case ProbeOutcome::InconclusiveFeasible: return "inconclusive-feasible";
  }
  return "unknown";
}

/// One active sampled constraint of an infeasible system.
struct ProbeMultiplier {
  std::size_t vertex;
  double omega;
  double weight;
};

struct ProbeResult {
  ProbeOutcome outcome = ProbeOutcome::Infeasible;
  /// Best normalized margin min_k Re[c(jw_k) conj(a_i(jw_k))] / |row| with |c_j| <= 1.
  double margin = 0.0;
  /// Candidate numerator (exact), present unless infeasible.
  std::optional<Poly> candidate;
  /// Dual multipliers of the binding sampled constraints, present when infeasible.
  std::vector<ProbeMultiplier> certificate;
};

struct ProbeOptions {
  std::size_t frequency_samples = 512;
  double margin = 1e-6;
  double omega_min = 1e-3;
  double omega_max = 1e3;
};

/// Logarithmic frequency grid w_k = 10^(l0 + (l1 - l0) k / n), k = 0..n-1.
/// The grid for 2n contains the grid for n, so refining by doubling only adds
/// constraints.
inline std::vector<double> log_frequency_grid(std::size_t samples, double lo, double hi) {
  if (samples == 0 || !(lo > 0) || !(hi > lo)) throw InvalidInput("frequency grid needs samples > 0 and 0 < lo < hi");
  std::vector<double> w(samples);
  const double l0 = std::log10(lo), span = std::log10(hi) - l0;
  for (std::size_t k = 0; k < samples; ++k)
    w[k] = std::pow(10.0, l0 + span * static_cast<double>(k) / static_cast<double>(samples));
  return w;
}

namespace detail {

inline bool verify_candidate(const Poly& c, const std::vector<Poly>& vertices) {
  if (c.is_zero()) return false;
  if (c.degree() == vertices.front().degree()) return vertex_certificate(c, vertices).family_spr;
  for (const auto& v : vertices)
    if (!re_positive(c, v)) return false;
  return true;
}

}  // namespace detail

inline ProbeResult lp_probe(const std::vector<Poly>& vertices, std::size_t numerator_degree,
                            const ProbeOptions& opt = {}) {
  if (vertices.empty()) throw InvalidInput("probe needs at least one vertex");
  const auto deg = vertices.front().degree_or_throw();
  for (const auto& v : vertices) {
    if (v.degree() != deg) throw InvalidInput("probe vertices differ in degree");
    if (!denominator_hurwitz(v)) throw PreconditionError("probe vertex is not Hurwitz: " + to_string(v));
  }
  if (numerator_degree > deg) throw InvalidInput("numerator degree exceeds the vertex degree");
  if (opt.frequency_samples < numerator_degree + 1)
    throw InvalidInput("frequency grid too small for the numerator degree");

  const std::size_t nc = numerator_degree + 1;
  const auto grid = log_frequency_grid(opt.frequency_samples, opt.omega_min, opt.omega_max);

  // Rows m with m.c = Re[c(jw) conj(a(jw))], normalized to unit length.
  struct Row {
    std::vector<double> m;
    std::size_t vertex;
    double omega;
  };
  std::vector<Row> rows;
  for (std::size_t vi = 0; vi < vertices.size(); ++vi) {
    const auto a = vertices[vi].cast<double>();
    for (double w : grid) {
      const std::complex<double> jw(0.0, w);
      std::complex<double> aw(0.0, 0.0);
      for (std::size_t k = a.coeffs().size(); k-- > 0;) aw = aw * jw + a.coeffs()[k];
      std::vector<double> m(nc);
      std::complex<double> pw(1.0, 0.0);
      double norm = 0.0;
      for (std::size_t j = 0; j < nc; ++j) {
        m[j] = (pw * std::conj(aw)).real();
        norm += m[j] * m[j];
        pw *= jw;
      }
      norm = std::sqrt(norm);
      if (norm == 0.0) continue;
      for (auto& x : m) x /= norm;
      rows.push_back({std::move(m), vi, w});
    }
  }

  // Shift to nonnegative variables: u = c + 1 in [0, 2], w = s + K in [0, 2K],
  // where K bounds |s| for any c in the box.
  const double shift = std::sqrt(static_cast<double>(nc)) + 1.0;
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (const auto& r : rows) {
    std::vector<double> row(nc + 1);
    double sum = 0.0;
    for (std::size_t j = 0; j < nc; ++j) {
      row[j] = -r.m[j];
      sum += r.m[j];
    }
    row[nc] = 1.0;
    a.push_back(std::move(row));
    b.push_back(shift - sum);
  }
  for (std::size_t j = 0; j <= nc; ++j) {
    std::vector<double> row(nc + 1, 0.0);
    row[j] = 1.0;
    a.push_back(std::move(row));
    b.push_back(j < nc ? 2.0 : 2.0 * shift);
  }
  std::vector<double> obj(nc + 1, 0.0);
  obj[nc] = 1.0;

  const auto sol = lp::maximize(a, b, obj);
  if (sol.status != lp::Status::Optimal) throw InternalContradiction("probe LP did not reach an optimum");

  ProbeResult out;
  out.margin = sol.x[nc] - shift;
  if (out.margin < opt.margin) {
    out.outcome = ProbeOutcome::Infeasible;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (sol.duals[i] > 1e-12) out.certificate.push_back({rows[i].vertex, rows[i].omega, sol.duals[i]});
    return out;
  }

  std::vector<double> c(nc);
  double scale = 0.0;
  for (std::size_t j = 0; j < nc; ++j) {
    c[j] = sol.x[j] - 1.0;
    scale = std::max(scale, std::abs(c[j]));
  }
  std::optional<Poly> first;
  for (unsigned bits : {8u, 12u, 16u, 24u, 32u, 48u}) {
    std::vector<Rational> q(nc);
    for (std::size_t j = 0; j < nc; ++j) q[j] = round_to_dyadic(c[j] / scale, bits);
    Poly cand(std::move(q));
    if (!first) first = cand;
    if (detail::verify_candidate(cand, vertices)) {
      out.outcome = ProbeOutcome::Feasible;
      out.candidate = std::move(cand);
      return out;
    }
  }
  out.outcome = ProbeOutcome::InconclusiveFeasible;
  out.candidate = first;
  return out;
}

}  // namespace sprsynth
