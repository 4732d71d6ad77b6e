#pragma once

// Small dense simplex for   max c.x  s.t.  A x <= b, x >= 0,  with b >= 0
// (the origin is feasible, so no phase one). Condensed tableau: one row per
// constraint, one column per nonbasic variable; Bland's rule against cycling.
// Sized for a handful of variables and a few thousand constraints.

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace sprsynth::lp {

enum class Status { Optimal, Unbounded, IterationLimit };

struct Result {
  Status status = Status::IterationLimit;
  std::vector<double> x;      // primal solution
  std::vector<double> duals;  // one multiplier per constraint row, >= 0
  double objective = 0.0;
  int iterations = 0;
};

inline Result maximize(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                       const std::vector<double>& c, int max_iterations = 20000, double tol = 1e-11) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw std::invalid_argument("lp: row count mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("lp: column count mismatch");
  for (double v : b)
    if (v < 0) throw std::invalid_argument("lp: origin must be feasible (b >= 0)");

  // basic_i = rhs_i + sum_j t[i][j] * nonbasic_j ;  z = z0 + sum_j d_j * nonbasic_j
  std::vector<std::vector<double>> t(m, std::vector<double>(n));
  std::vector<double> rhs(b);
  std::vector<double> d(c);
  double z0 = 0.0;
  std::vector<std::size_t> basic(m), nonbasic(n);
  for (std::size_t i = 0; i < m; ++i) {
    basic[i] = n + i;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = -a[i][j];
  }
  for (std::size_t j = 0; j < n; ++j) nonbasic[j] = j;

  Result res;
  for (res.iterations = 0; res.iterations < max_iterations; ++res.iterations) {
    std::size_t s = n;
    for (std::size_t j = 0; j < n; ++j)
      if (d[j] > tol && (s == n || nonbasic[j] < nonbasic[s])) s = j;
    if (s == n) {
      res.status = Status::Optimal;
      break;
    }
    std::size_t r = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][s] >= -tol) continue;
      double ratio = std::max(rhs[i], 0.0) / -t[i][s];
      if (ratio < best - 1e-15 || (ratio <= best + 1e-15 && r != m && basic[i] < basic[r])) {
        best = ratio;
        r = i;
      }
    }
    if (r == m) {
      res.status = Status::Unbounded;
      return res;
    }

    const double piv = t[r][s];
    rhs[r] = -rhs[r] / piv;
    for (std::size_t j = 0; j < n; ++j) t[r][j] = j == s ? 1.0 / piv : -t[r][j] / piv;
    auto eliminate = [&](std::vector<double>& row, double& constant) {
      const double coef = row[s];
      if (coef == 0.0) return;
      constant += coef * rhs[r];
      for (std::size_t j = 0; j < n; ++j) row[j] = j == s ? coef * t[r][s] : row[j] + coef * t[r][j];
    };
    for (std::size_t i = 0; i < m; ++i)
      if (i != r) eliminate(t[i], rhs[i]);
    eliminate(d, z0);
    std::swap(basic[r], nonbasic[s]);
  }

  res.x.assign(n, 0.0);
  res.duals.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (basic[i] < n) res.x[basic[i]] = rhs[i];
  for (std::size_t j = 0; j < n; ++j)
    if (nonbasic[j] >= n) res.duals[nonbasic[j] - n] = -d[j];
  res.objective = z0;
  return res;
}

}  // namespace sprsynth::lp
