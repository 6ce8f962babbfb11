#include "gammakit/oligopoly/cost.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gammakit::oligopoly {

PiecewiseLinearCost::PiecewiseLinearCost(std::vector<std::size_t> member_order,
                                         std::vector<double> breakpoints,
                                         std::vector<double> slopes,
                                         std::vector<double> capacities)
    : order_(std::move(member_order)),
      breakpoints_(std::move(breakpoints)),
      slopes_(std::move(slopes)),
      capacities_(std::move(capacities)) {
  if (slopes_.empty() || breakpoints_.size() != slopes_.size() + 1 ||
      capacities_.size() != slopes_.size() || order_.size() != slopes_.size()) {
    throw std::invalid_argument("inconsistent piecewise cost segments");
  }
  for (std::size_t k = 1; k < slopes_.size(); ++k) {
    if (slopes_[k] < slopes_[k - 1]) throw std::invalid_argument("cost slopes must be nondecreasing");
  }
}

void PiecewiseLinearCost::check_domain(double y) const {
  // Accumulated sums may overshoot the top breakpoint by a few ulps.
  if (!(y >= 0.0) || y > capacity() + 1e-9 * (1.0 + capacity())) {
    throw std::domain_error("output " + std::to_string(y) + " outside [0, " +
                            std::to_string(capacity()) + "]");
  }
}

double PiecewiseLinearCost::evaluate(double y) const {
  check_domain(y);
  double total = 0.0;
  for (std::size_t k = 0; k < slopes_.size() && y > breakpoints_[k]; ++k) {
    total += slopes_[k] * (std::min(y, breakpoints_[k + 1]) - breakpoints_[k]);
  }
  return total;
}

double PiecewiseLinearCost::right_slope(double y) const {
  check_domain(y);
  for (std::size_t k = 0; k < slopes_.size(); ++k) {
    if (y < breakpoints_[k + 1]) return slopes_[k];
  }
  return slopes_.back();
}

double PiecewiseLinearCost::left_slope(double y) const {
  check_domain(y);
  for (std::size_t k = 0; k < slopes_.size(); ++k) {
    if (y <= breakpoints_[k + 1] && breakpoints_[k + 1] > breakpoints_[k]) return slopes_[k];
  }
  return slopes_.back();
}

std::vector<double> PiecewiseLinearCost::allocate(double y) const {
  check_domain(y);
  std::vector<double> out(order_.size(), 0.0);
  double remaining = y;
  for (std::size_t k = 0; k < order_.size() && remaining > 0.0; ++k) {
    out[k] = std::min(remaining, capacities_[k]);
    remaining -= out[k];
  }
  return out;
}

void PiecewiseLinearCost::allocate_into(double y, StrategyProfile& profile) const {
  const auto shares = allocate(y);
  for (std::size_t k = 0; k < order_.size(); ++k) profile.at(order_[k]) = shares[k];
}

PiecewiseLinearCost aggregate_cost(const OligopolySituation& s, const Coalition& coalition) {
  std::vector<std::size_t> order = coalition.members();
  if (order.back() >= s.firm_count()) throw std::invalid_argument("coalition outside the market");
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return s.cost(i) < s.cost(j); });

  std::vector<double> breakpoints = {0.0};
  std::vector<double> slopes;
  std::vector<double> capacities;
  Rational cumulative(0);
  for (auto i : order) {
    // Exact running sum so that 2.4 + 0.15 lands on the double nearest 2.55.
    cumulative = cumulative + s.exact_capacity(i);
    breakpoints.push_back(cumulative.to_double());
    slopes.push_back(s.cost(i));
    capacities.push_back(s.capacity(i));
  }
  return PiecewiseLinearCost(std::move(order), std::move(breakpoints), std::move(slopes),
                             std::move(capacities));
}

}  // namespace gammakit::oligopoly
