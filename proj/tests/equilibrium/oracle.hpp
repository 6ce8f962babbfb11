#pragma once

// Equilibrium of the all-singleton game along the aggregate output: at a
// total X every firm's stationary output is (a - c - bX^2) / (2bX), clamped
// to its capacity, and the equilibrium total is the fixed point of their
// sum. Independent of the best-reply iteration under test.

#include <algorithm>
#include <vector>

#include "gammakit/oligopoly/situation.hpp"

namespace oracle {

inline std::vector<double> outputs_at(const gammakit::oligopoly::OligopolySituation& s, double x) {
  std::vector<double> out;
  for (std::size_t i = 0; i < s.firm_count(); ++i) {
    const double v = (s.a() - s.cost(i) - s.b() * x * x) / (2.0 * s.b() * x);
    out.push_back(std::clamp(v, 0.0, s.capacity(i)));
  }
  return out;
}

inline std::vector<double> singleton_equilibrium(const gammakit::oligopoly::OligopolySituation& s) {
  double lo = 1e-9;
  double hi = 0.0;
  for (double w : s.capacities()) hi += w;
  auto excess = [&](double x) {
    double sum = 0.0;
    for (double v : outputs_at(s, x)) sum += v;
    return sum - x;
  };
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  return outputs_at(s, 0.5 * (lo + hi));
}

}  // namespace oracle
