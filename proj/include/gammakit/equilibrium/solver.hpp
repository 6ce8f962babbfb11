#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammakit/oligopoly/coalition.hpp"
#include "gammakit/oligopoly/situation.hpp"

namespace gammakit::equilibrium {

using oligopoly::Coalition;
using oligopoly::OligopolySituation;
using oligopoly::Partition;
using oligopoly::StrategyProfile;

struct SolverSettings {
  double damping = 0.5;               // lambda in y <- (1 - lambda) y + lambda BR(y)
  std::size_t max_iterations = 10000;  // per start
  double tolerance = 1e-6;            // accepted unilateral gain
  double convergence = 1e-8;          // sup-norm change that ends an iteration
  double grid_step = 0.05;            // certification grid and fallback scan

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

/// Checkable equilibrium claim: nobody gains more than `epsilon` by a
/// unilateral change of its aggregate output.
struct Certificate {
  double epsilon = 0.0;
  std::vector<double> gains;         // per actor, may be slightly negative
  std::vector<double> best_outputs;  // per actor best reply to the others
  double grid_step = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// The deviation value of each actor is the larger of its numeric best
/// reply and the best point of a `grid_step` grid over [0, capacity]. The
/// current payoff uses the member-wise outputs in `profile`.
Certificate certify(const OligopolySituation& s, const Partition& partition,
                    const StrategyProfile& profile, double grid_step, double tolerance = 1e-6);

class GridTooLargeError : public std::runtime_error {
 public:
  explicit GridTooLargeError(const std::string& message) : std::runtime_error(message) {}
};

inline constexpr std::uint64_t kMaxScanProfiles = 100'000'000;

struct ScanReport {
  double delta_star = 0.0;                   // min over grid of max deviation gain
  std::vector<double> argmin_actor_outputs;  // grid profile attaining delta_star
  StrategyProfile argmin_profile;            // member-wise, min-cost allocation
  std::vector<double> upper_bounds;          // per actor box [0, bound]
  std::vector<std::size_t> grid_points;      // per actor
  std::uint64_t profiles = 0;
  double grid_step = 0.0;
  double tolerance = 0.0;
  bool no_equilibrium_on_grid = false;       // delta_star > tolerance
};

/// Scores every profile of actor aggregate outputs on a grid. Each actor's
/// box is [0, min(capacity, BR(0)) + step] intersected with [0, capacity];
/// no actor ever replies above its zero-opponent best reply.
ScanReport exhaustive_scan(const OligopolySituation& s, const Partition& partition,
                           double grid_step, double tolerance = 1e-6);

enum class Status { kFound, kNotFound };

const char* to_string(Status status);

struct EquilibriumResult {
  Status status = Status::kNotFound;
  std::string partition;              // "1,2,3|4|5"
  StrategyProfile profile;            // member-wise outputs
  std::vector<double> actor_outputs;  // aggregate output per block
  double epsilon = 0.0;               // certified gain bound (found)
  double delta_star = 0.0;            // grid bound (not found)
  double grid_step = 0.0;
  std::size_t iterations = 0;
  std::string start;                  // "zero", "capacity", "midpoint" or "scan"
  SolverSettings settings;
  Certificate certificate;
  std::optional<ScanReport> scan;
};

/// Damped simultaneous best-reply iteration on block aggregates from three
/// starts (all zero, all at capacity, midpoint). The first start that
/// converges and certifies wins; otherwise the exhaustive scan decides.
EquilibriumResult partial_agreement_equilibrium(const OligopolySituation& s,
                                                const Partition& partition,
                                                const SolverSettings& settings = {});

/// Upper bound on |d profit / d y| for any actor over the feasible box.
double payoff_lipschitz_bound(const OligopolySituation& s);

}  // namespace gammakit::equilibrium
