#include "gammakit/equilibrium/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace gammakit::equilibrium {

LpSolution maximize_standard(const std::vector<std::vector<double>>& a,
                             const std::vector<double>& b, const std::vector<double>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw std::invalid_argument("row count mismatch");
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("column count mismatch");
    if (b[i] < 0.0) throw std::invalid_argument("right-hand side must be nonnegative");
  }

  // Row 0 holds reduced costs (z_j - c_j); column n + m holds right-hand sides.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(width, 0.0));
  for (std::size_t j = 0; j < n; ++j) t[0][j] = -c[j];
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i + 1][j] = a[i][j];
    t[i + 1][n + i] = 1.0;
    t[i + 1][width - 1] = b[i];
    basis[i] = n + i;
  }

  constexpr double kEps = 1e-12;
  LpSolution sol;
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (t[0][j] < -kEps) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double coef = t[i + 1][enter];
      if (coef <= kEps) continue;
      const double ratio = t[i + 1][width - 1] / coef;
      if (leave == m || ratio < best_ratio - kEps ||
          (std::abs(ratio - best_ratio) <= kEps && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) {
      sol.status = LpStatus::kUnbounded;
      return sol;
    }

    auto& pivot_row = t[leave + 1];
    const double pivot = pivot_row[enter];
    for (double& v : pivot_row) v /= pivot;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave + 1) continue;
      const double factor = t[r][enter];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) t[r][j] -= factor * pivot_row[j];
    }
    basis[leave] = enter;
  }

  sol.objective = t[0][width - 1];
  sol.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) sol.x[basis[i]] = t[i + 1][width - 1];
  }
  sol.dual.resize(m);
  for (std::size_t i = 0; i < m; ++i) sol.dual[i] = t[0][n + i];
  return sol;
}

}  // namespace gammakit::equilibrium
