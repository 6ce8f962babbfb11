#include "gammakit/oligopoly/market.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gammakit/oligopoly/golden.hpp"

namespace gammakit::oligopoly {

namespace {

constexpr double kFeasibilitySlack = 1e-9;

void check_total(double total_output) {
  if (!(total_output >= 0.0)) {
    throw std::domain_error("total output must be nonnegative, got " +
                            std::to_string(total_output));
  }
}

// Root of a decreasing function on [lo, hi] with g(lo) > 0 > g(hi).
template <typename G>
double bisect_decreasing(G&& g, double lo, double hi) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (g(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double price(const OligopolySituation& s, double total_output) {
  check_total(total_output);
  const double p = s.a() - s.b() * total_output * total_output;
  return s.clamp_price() && p < 0.0 ? 0.0 : p;
}

double price_slope(const OligopolySituation& s, double total_output) {
  check_total(total_output);
  if (s.clamp_price() && s.a() - s.b() * total_output * total_output < 0.0) return 0.0;
  return -2.0 * s.b() * total_output;
}

void check_feasible(const OligopolySituation& s, const StrategyProfile& x) {
  if (x.size() != s.firm_count()) {
    throw std::domain_error("profile has " + std::to_string(x.size()) + " entries for " +
                            std::to_string(s.firm_count()) + " firms");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= 0.0) || x[i] > s.capacity(i) + kFeasibilitySlack) {
      throw std::domain_error("output of firm " + std::to_string(i + 1) + " (" +
                              std::to_string(x[i]) + ") outside [0, " +
                              std::to_string(s.capacity(i)) + "]");
    }
  }
}

double firm_profit(const OligopolySituation& s, std::size_t firm, const StrategyProfile& x) {
  check_feasible(s, x);
  double total = 0.0;
  for (double xi : x) total += xi;
  return (price(s, total) - s.cost(firm)) * x.at(firm);
}

double coalition_profit(const OligopolySituation& s, const Coalition& coalition,
                        const StrategyProfile& x) {
  check_feasible(s, x);
  double total = 0.0;
  for (double xi : x) total += xi;
  const double p = price(s, total);
  double profit = 0.0;
  for (auto i : coalition.members()) profit += (p - s.cost(i)) * x[i];
  return profit;
}

double coalition_profit(const OligopolySituation& s, const PiecewiseLinearCost& cost, double y,
                        double z) {
  if (!(z >= 0.0)) throw std::domain_error("opponents' output must be nonnegative");
  return price(s, y + z) * y - cost.evaluate(y);
}

double coalition_profit(const OligopolySituation& s, const Coalition& coalition, double y,
                        double z) {
  return coalition_profit(s, aggregate_cost(s, coalition), y, z);
}

double marginal_profit(const OligopolySituation& s, const PiecewiseLinearCost& cost, double y,
                       double z) {
  return price(s, y + z) + price_slope(s, y + z) * y - cost.right_slope(y);
}

BestResponse best_response(const OligopolySituation& s, const PiecewiseLinearCost& cost,
                           double z) {
  if (!(z >= 0.0)) throw std::domain_error("opponents' output must be nonnegative");
  const auto& bp = cost.breakpoints();

  BestResponse best{0.0, coalition_profit(s, cost, 0.0, z)};
  auto consider = [&](double y) {
    const double v = coalition_profit(s, cost, y, z);
    if (v > best.profit || (v == best.profit && y < best.output)) best = {y, v};
  };

  for (std::size_t k = 0; k < cost.segment_count(); ++k) {
    const double lo = bp[k];
    const double hi = bp[k + 1];
    consider(hi);
    if (!(hi > lo)) continue;

    const double slope = cost.slopes()[k];
    auto objective = [&](double y) { return price(s, y + z) * y - slope * (y - lo); };
    auto marginal = [&](double y) { return price(s, y + z) + price_slope(s, y + z) * y - slope; };

    double y = golden_section_maximize(objective, lo, hi, kArgumentTolerance).x;
    const double width = 1e-6;
    const double near_lo = std::max(lo, y - width);
    const double near_hi = std::min(hi, y + width);
    if (marginal(near_lo) > 0.0 && marginal(near_hi) < 0.0) {
      y = bisect_decreasing(marginal, near_lo, near_hi);
    } else if (marginal(lo) > 0.0 && marginal(hi) < 0.0) {
      y = bisect_decreasing(marginal, lo, hi);
    }
    consider(y);
  }
  return best;
}

BestResponse best_response(const OligopolySituation& s, const Coalition& actor, double z) {
  return best_response(s, aggregate_cost(s, actor), z);
}

}  // namespace gammakit::oligopoly
