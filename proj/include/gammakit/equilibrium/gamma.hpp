#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gammakit/equilibrium/core.hpp"
#include "gammakit/equilibrium/solver.hpp"

namespace gammakit::equilibrium {

struct GammaEntry {
  Coalition coalition;
  std::optional<double> value;  // empty means VOID
  EquilibriumResult provenance;
};

class GammaCharacteristicFunction {
 public:
  GammaCharacteristicFunction(std::size_t n, SolverSettings settings,
                              std::vector<GammaEntry> entries);

  std::size_t firm_count() const { return n_; }
  const SolverSettings& settings() const { return settings_; }
  /// One entry per nonempty coalition, in increasing bit-mask order.
  const std::vector<GammaEntry>& entries() const { return entries_; }
  const GammaEntry& at(const Coalition& coalition) const;
  std::size_t void_count() const;
  /// The values as a TU game; VOID entries stay empty.
  TuGame game() const;

 private:
  std::size_t n_;
  SolverSettings settings_;
  std::vector<GammaEntry> entries_;
};

/// Solves the game induced by {S} plus singletons for every nonempty S and
/// records the members' summed profit, or VOID if no equilibrium was found.
/// `jobs` worker threads share the coalitions; the result does not depend
/// on it.
GammaCharacteristicFunction gamma_characteristic(const OligopolySituation& s,
                                                 const SolverSettings& settings,
                                                 std::size_t jobs = 1);

}  // namespace gammakit::equilibrium
