#pragma once

#include <cstddef>
#include <vector>

#include "gammakit/equilibrium/solver.hpp"

namespace gammakit::equilibrium {

inline constexpr double kFocStep = 1e-5;
inline constexpr double kRankThreshold = 1e-8;

struct FocDiagnostics {
  std::vector<double> residuals;  // d profit / d own output, one per variable
  std::vector<std::vector<double>> jacobian;
  std::vector<double> singular_values;
  std::size_t rank = 0;  // singular values above kRankThreshold * largest
  std::size_t actor_count = 0;
  std::vector<bool> one_sided;  // variable at a box edge; difference was one-sided
};

/// First-order system of the game between the blocks of `partition`, in
/// block aggregate outputs taken from the member-wise `profile`.
FocDiagnostics foc_diagnostics(const OligopolySituation& s, const Partition& partition,
                               const StrategyProfile& profile);

/// First-order system of one coalition written in its members' outputs:
/// residual i is d(coalition profit)/d x_i with every other firm fixed.
FocDiagnostics memberwise_foc_diagnostics(const OligopolySituation& s, const Coalition& coalition,
                                          const StrategyProfile& profile);

}  // namespace gammakit::equilibrium
