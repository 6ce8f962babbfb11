#include "gammakit/equilibrium/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gammakit/equilibrium/simplex.hpp"

namespace gammakit::equilibrium {

TuGame::TuGame(std::size_t players) : n(players) {
  if (players == 0 || players > kMaxPlayers) {
    throw std::invalid_argument("games need 1 to 12 players");
  }
  values.assign(std::size_t{1} << players, std::nullopt);
}

double TuGame::at(std::uint64_t mask) const {
  if (mask == 0 || mask >= values.size()) throw std::out_of_range("bad coalition mask");
  if (!values[mask]) throw VoidEntryError("coalition " + std::to_string(mask) + " is VOID");
  return *values[mask];
}

void TuGame::set(std::uint64_t mask, double value) {
  if (mask == 0 || mask >= values.size()) throw std::out_of_range("bad coalition mask");
  values[mask] = value;
}

CoreResult core_nonempty(const TuGame& game, double tolerance) {
  const std::size_t n = game.n;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    if (!game.values[mask]) {
      throw VoidEntryError("core undefined: VOID entry for coalition mask " + std::to_string(mask));
    }
  }

  // Shift by the singleton values, w_i = u_i - v({i}) >= 0, and solve
  //   min sum w  s.t.  sum_{i in S} w_i >= excess(S)
  // through its dual, max excess.y s.t. sum_{S ni i} y_S <= 1, y >= 0.
  std::vector<double> singles(n);
  double single_total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    singles[i] = game.at(std::uint64_t{1} << i);
    single_total += singles[i];
  }
  std::vector<std::uint64_t> masks;
  std::vector<double> excess;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;
    double e = game.at(mask);
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) e -= singles[i];
    }
    masks.push_back(mask);
    excess.push_back(e);
  }

  std::vector<std::vector<double>> a(n, std::vector<double>(masks.size(), 0.0));
  for (std::size_t k = 0; k < masks.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (masks[k] >> i & 1) a[i][k] = 1.0;
    }
  }
  const LpSolution lp = maximize_standard(a, std::vector<double>(n, 1.0), excess);

  CoreResult r;
  r.grand_value = game.at(full);
  r.min_total = single_total + std::max(0.0, lp.objective);
  r.nonempty = r.min_total <= r.grand_value + tolerance * (1.0 + std::abs(r.grand_value));
  if (r.nonempty) {
    r.imputation.resize(n);
    double assigned = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      r.imputation[i] = singles[i] + lp.dual[i];
      assigned += r.imputation[i];
    }
    // Hand any leftover of v(N) to player 1; it only loosens constraints.
    r.imputation[0] += r.grand_value - assigned;
  }
  return r;
}

}  // namespace gammakit::equilibrium
