#include "gammakit/equilibrium/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "gammakit/oligopoly/cost.hpp"
#include "gammakit/oligopoly/curves.hpp"
#include "gammakit/oligopoly/market.hpp"

namespace gammakit::equilibrium {

using oligopoly::BestResponse;
using oligopoly::PiecewiseLinearCost;

namespace {

std::vector<PiecewiseLinearCost> block_costs(const OligopolySituation& s, const Partition& p) {
  if (p.firm_count() != s.firm_count()) {
    throw std::invalid_argument("partition and situation disagree on the number of firms");
  }
  std::vector<PiecewiseLinearCost> costs;
  for (const auto& block : p.blocks()) costs.push_back(oligopoly::aggregate_cost(s, block));
  return costs;
}

double sum_except(const std::vector<double>& y, std::size_t skip) {
  double z = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (j != skip) z += y[j];
  }
  return z;
}

StrategyProfile member_profile(const OligopolySituation& s,
                               const std::vector<PiecewiseLinearCost>& costs,
                               const std::vector<double>& y) {
  StrategyProfile x(s.firm_count(), 0.0);
  for (std::size_t k = 0; k < costs.size(); ++k) {
    costs[k].allocate_into(std::min(y[k], costs[k].capacity()), x);
  }
  return x;
}

// Grid 0, h, 2h, ... up to `bound`, never above `capacity`; the capacity
// itself is included whenever the bound reaches it.
std::vector<double> axis(double bound, double capacity, double h) {
  std::vector<double> values;
  const double top = std::min(bound, capacity);
  const std::size_t n = oligopoly::grid_size(0.0, top, h);
  for (std::size_t j = 0; j < n; ++j) values.push_back(oligopoly::grid_point(0.0, j, h));
  if (bound >= capacity && values.back() < capacity) values.push_back(capacity);
  return values;
}

// Best reply lookups keyed by the exact opponents' total.
class ReplyCache {
 public:
  ReplyCache(const OligopolySituation& s, const PiecewiseLinearCost& cost) : s_(s), cost_(cost) {}

  const BestResponse& operator()(double z) {
    auto it = cache_.find(z);
    if (it == cache_.end()) it = cache_.emplace(z, oligopoly::best_response(s_, cost_, z)).first;
    return it->second;
  }

 private:
  const OligopolySituation& s_;
  const PiecewiseLinearCost& cost_;
  std::unordered_map<double, BestResponse> cache_;
};

}  // namespace

void SolverSettings::validate() const {
  if (!(damping > 0.0 && damping <= 1.0)) {
    throw std::invalid_argument("damping must lie in (0, 1]");
  }
  if (max_iterations == 0) throw std::invalid_argument("max iterations must be positive");
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!(convergence > 0.0)) throw std::invalid_argument("convergence threshold must be positive");
  if (!(grid_step > 0.0)) throw std::invalid_argument("grid step must be positive");
}

const char* to_string(Status status) {
  return status == Status::kFound ? "found" : "not-found";
}

Certificate certify(const OligopolySituation& s, const Partition& partition,
                    const StrategyProfile& profile, double grid_step, double tolerance) {
  if (!(grid_step > 0.0)) throw std::invalid_argument("grid step must be positive");
  oligopoly::check_feasible(s, profile);
  const auto costs = block_costs(s, partition);

  std::vector<double> y(costs.size(), 0.0);
  for (std::size_t k = 0; k < costs.size(); ++k) {
    for (auto i : partition.blocks()[k].members()) y[k] += profile[i];
  }

  Certificate cert;
  cert.grid_step = grid_step;
  cert.tolerance = tolerance;
  for (std::size_t k = 0; k < costs.size(); ++k) {
    const double z = sum_except(y, k);
    const double current = oligopoly::coalition_profit(s, partition.blocks()[k], profile);
    const BestResponse br = oligopoly::best_response(s, costs[k], z);
    double deviation = br.profit;
    double best_output = br.output;
    for (double g : axis(costs[k].capacity(), costs[k].capacity(), grid_step)) {
      const double v = oligopoly::coalition_profit(s, costs[k], g, z);
      if (v > deviation) {
        deviation = v;
        best_output = g;
      }
    }
    cert.gains.push_back(deviation - current);
    cert.best_outputs.push_back(best_output);
  }
  cert.epsilon = std::max(0.0, *std::max_element(cert.gains.begin(), cert.gains.end()));
  cert.passed = cert.epsilon <= tolerance;
  return cert;
}

ScanReport exhaustive_scan(const OligopolySituation& s, const Partition& partition,
                           double grid_step, double tolerance) {
  if (!(grid_step > 0.0)) throw std::invalid_argument("grid step must be positive");
  const auto costs = block_costs(s, partition);
  const std::size_t m = costs.size();

  ScanReport report;
  report.grid_step = grid_step;
  report.tolerance = tolerance;
  std::vector<std::vector<double>> axes;
  double profiles = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double zero_reply = oligopoly::best_response(s, costs[k], 0.0).output;
    const double bound = std::min(costs[k].capacity(), zero_reply) + grid_step;
    axes.push_back(axis(bound, costs[k].capacity(), grid_step));
    report.upper_bounds.push_back(axes.back().back());
    report.grid_points.push_back(axes.back().size());
    profiles *= static_cast<double>(axes.back().size());
  }
  if (profiles > static_cast<double>(kMaxScanProfiles)) {
    throw GridTooLargeError("scan grid has " + std::to_string(profiles) +
                            " profiles (limit 1e8); use a coarser grid step than " +
                            std::to_string(grid_step));
  }
  report.profiles = static_cast<std::uint64_t>(profiles);

  std::vector<ReplyCache> replies;
  for (const auto& c : costs) replies.emplace_back(s, c);

  std::vector<std::size_t> index(m, 0);
  std::vector<double> y(m);
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_y;
  while (true) {
    for (std::size_t k = 0; k < m; ++k) y[k] = axes[k][index[k]];
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < m && worst < best; ++k) {
      const double z = sum_except(y, k);
      const double gain =
          replies[k](z).profit - oligopoly::coalition_profit(s, costs[k], y[k], z);
      worst = std::max(worst, gain);
    }
    if (worst < best) {
      best = worst;
      best_y = y;
    }
    std::size_t k = 0;
    while (k < m && ++index[k] == axes[k].size()) index[k++] = 0;
    if (k == m) break;
  }

  report.delta_star = std::max(0.0, best);
  report.argmin_actor_outputs = best_y;
  report.argmin_profile = member_profile(s, costs, best_y);
  report.no_equilibrium_on_grid = report.delta_star > tolerance;
  return report;
}

EquilibriumResult partial_agreement_equilibrium(const OligopolySituation& s,
                                                const Partition& partition,
                                                const SolverSettings& settings) {
  settings.validate();
  const auto costs = block_costs(s, partition);
  const std::size_t m = costs.size();

  EquilibriumResult result;
  result.partition = partition.to_string();
  result.grid_step = settings.grid_step;
  result.settings = settings;

  struct Start {
    const char* name;
    double fraction;
  };
  constexpr Start kStarts[] = {{"zero", 0.0}, {"capacity", 1.0}, {"midpoint", 0.5}};

  for (const auto& start : kStarts) {
    std::vector<double> y(m);
    for (std::size_t k = 0; k < m; ++k) y[k] = start.fraction * costs[k].capacity();

    bool converged = false;
    std::size_t it = 0;
    std::vector<double> next(m);
    while (it < settings.max_iterations && !converged) {
      ++it;
      double change = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        const double reply = oligopoly::best_response(s, costs[k], sum_except(y, k)).output;
        next[k] = (1.0 - settings.damping) * y[k] + settings.damping * reply;
        change = std::max(change, std::abs(next[k] - y[k]));
      }
      y.swap(next);
      converged = change < settings.convergence;
    }
    if (!converged) continue;
    // Undamped last step so corner replies land exactly on their bound.
    for (std::size_t k = 0; k < m; ++k) {
      next[k] = oligopoly::best_response(s, costs[k], sum_except(y, k)).output;
    }
    y.swap(next);

    StrategyProfile x = member_profile(s, costs, y);
    Certificate cert = certify(s, partition, x, settings.grid_step, settings.tolerance);
    if (!cert.passed) continue;

    result.status = Status::kFound;
    result.profile = std::move(x);
    result.actor_outputs = y;
    result.epsilon = cert.epsilon;
    result.iterations = it;
    result.start = start.name;
    result.certificate = std::move(cert);
    return result;
  }

  ScanReport scan = exhaustive_scan(s, partition, settings.grid_step, settings.tolerance);
  result.start = "scan";
  result.profile = scan.argmin_profile;
  result.actor_outputs = scan.argmin_actor_outputs;
  result.certificate =
      certify(s, partition, scan.argmin_profile, settings.grid_step, settings.tolerance);
  if (!scan.no_equilibrium_on_grid && result.certificate.passed) {
    result.status = Status::kFound;
    result.epsilon = result.certificate.epsilon;
  } else {
    result.status = Status::kNotFound;
    result.delta_star = scan.delta_star;
  }
  result.scan = std::move(scan);
  return result;
}

double payoff_lipschitz_bound(const OligopolySituation& s) {
  double total = 0.0;
  double max_cost = 0.0;
  for (std::size_t i = 0; i < s.firm_count(); ++i) {
    total += s.capacity(i);
    max_cost = std::max(max_cost, s.cost(i));
  }
  // |p| + |p'| y + C' with y <= X <= total capacity.
  return s.a() + 3.0 * s.b() * total * total + max_cost;
}

}  // namespace gammakit::equilibrium
