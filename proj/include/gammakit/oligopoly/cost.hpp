#pragma once

#include <cstddef>
#include <vector>

#include "gammakit/oligopoly/coalition.hpp"
#include "gammakit/oligopoly/situation.hpp"

namespace gammakit::oligopoly {

/// Minimal cost for a coalition to produce a given total: members are filled
/// up to capacity in ascending marginal-cost order (ties by firm index). The
/// result is convex and piecewise linear with one segment per member.
class PiecewiseLinearCost {
 public:
  PiecewiseLinearCost(std::vector<std::size_t> member_order, std::vector<double> breakpoints,
                      std::vector<double> slopes, std::vector<double> capacities);

  /// Firms in fill order.
  const std::vector<std::size_t>& member_order() const { return order_; }
  /// breakpoints().front() == 0, breakpoints().back() == total capacity.
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& slopes() const { return slopes_; }
  std::size_t segment_count() const { return slopes_.size(); }
  double capacity() const { return breakpoints_.back(); }

  double evaluate(double y) const;
  /// Right derivative at y (the slope of the segment that y starts).
  double right_slope(double y) const;
  double left_slope(double y) const;

  /// Member outputs (indexed like member_order()) realising evaluate(y).
  std::vector<double> allocate(double y) const;
  /// Same allocation scattered into a full n-firm profile.
  void allocate_into(double y, StrategyProfile& profile) const;

 private:
  void check_domain(double y) const;

  std::vector<std::size_t> order_;
  std::vector<double> breakpoints_;
  std::vector<double> slopes_;
  std::vector<double> capacities_;
};

PiecewiseLinearCost aggregate_cost(const OligopolySituation& s, const Coalition& coalition);

}  // namespace gammakit::oligopoly
