#pragma once

#include <vector>

namespace gammakit::equilibrium {

enum class LpStatus { kOptimal, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kOptimal;
  double objective = 0.0;
  std::vector<double> x;     // primal optimum
  std::vector<double> dual;  // one multiplier per row, all nonnegative
};

/// Dense tableau simplex with Bland's rule for
///   maximise c.x  subject to  A x <= b,  x >= 0,  with b >= 0.
/// The origin is feasible, so no first phase is needed. Dual values are read
/// off the slack columns of the final tableau.
LpSolution maximize_standard(const std::vector<std::vector<double>>& a,
                             const std::vector<double>& b, const std::vector<double>& c);

}  // namespace gammakit::equilibrium
