#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gammakit::equilibrium {

/// Characteristic function indexed by coalition bit mask (bit i = firm i).
/// Entry 0 is unused; an empty optional marks a VOID value.
struct TuGame {
  std::size_t n = 0;
  std::vector<std::optional<double>> values;

  explicit TuGame(std::size_t players);
  double at(std::uint64_t mask) const;
  void set(std::uint64_t mask, double value);
};

class VoidEntryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CoreResult {
  bool nonempty = false;
  std::vector<double> imputation;  // a core allocation when nonempty
  double min_total = 0.0;          // least total payoff meeting every coalition
  double grand_value = 0.0;
};

inline constexpr std::size_t kMaxPlayers = 12;

/// Decides whether some u with sum u = v(N) and sum_{i in S} u_i >= v(S)
/// for all S exists. Throws VoidEntryError if any entry is VOID.
CoreResult core_nonempty(const TuGame& game, double tolerance = 1e-9);

}  // namespace gammakit::equilibrium
