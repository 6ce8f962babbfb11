#include "gammakit/equilibrium/foc.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <functional>

#include "gammakit/oligopoly/cost.hpp"
#include "gammakit/oligopoly/market.hpp"

namespace gammakit::equilibrium {

namespace {

struct Stencil {
  double lo;
  double hi;
  bool one_sided;
};

Stencil stencil(double v, double capacity) {
  double lo = v - kFocStep;
  double hi = v + kFocStep;
  bool one_sided = false;
  if (lo < 0.0) {
    lo = v;
    one_sided = true;
  }
  if (hi > capacity) {
    hi = v;
    one_sided = true;
  }
  return {lo, hi, one_sided};
}

// Residuals come from differences of `value`, the Jacobian from
// differences of the analytic `marginal`.
FocDiagnostics assemble(const std::vector<double>& point, const std::vector<double>& caps,
                        const std::function<double(std::size_t, const std::vector<double>&)>& value,
                        const std::function<double(std::size_t, const std::vector<double>&)>& marginal) {
  const std::size_t m = point.size();
  FocDiagnostics d;
  d.actor_count = m;
  d.jacobian.assign(m, std::vector<double>(m, 0.0));
  std::vector<Stencil> st;
  for (std::size_t k = 0; k < m; ++k) {
    st.push_back(stencil(point[k], caps[k]));
    d.one_sided.push_back(st.back().one_sided);
  }

  for (std::size_t k = 0; k < m; ++k) {
    auto lo = point;
    auto hi = point;
    lo[k] = st[k].lo;
    hi[k] = st[k].hi;
    const double width = st[k].hi - st[k].lo;
    d.residuals.push_back(width > 0.0 ? (value(k, hi) - value(k, lo)) / width : 0.0);
  }
  for (std::size_t j = 0; j < m; ++j) {
    auto lo = point;
    auto hi = point;
    lo[j] = st[j].lo;
    hi[j] = st[j].hi;
    const double width = st[j].hi - st[j].lo;
    if (!(width > 0.0)) continue;
    for (std::size_t k = 0; k < m; ++k) {
      d.jacobian[k][j] = (marginal(k, hi) - marginal(k, lo)) / width;
    }
  }

  Eigen::MatrixXd jac(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j) jac(k, j) = d.jacobian[k][j];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  const auto& sv = svd.singularValues();
  d.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double largest = sv.size() > 0 ? sv(0) : 0.0;
  for (double v : d.singular_values) {
    if (largest > 0.0 && v > kRankThreshold * largest) ++d.rank;
  }
  return d;
}

double total(const std::vector<double>& v) {
  double t = 0.0;
  for (double x : v) t += x;
  return t;
}

}  // namespace

FocDiagnostics foc_diagnostics(const OligopolySituation& s, const Partition& partition,
                               const StrategyProfile& profile) {
  oligopoly::check_feasible(s, profile);
  std::vector<oligopoly::PiecewiseLinearCost> costs;
  std::vector<double> y;
  std::vector<double> caps;
  for (const auto& block : partition.blocks()) {
    costs.push_back(oligopoly::aggregate_cost(s, block));
    double sum = 0.0;
    for (auto i : block.members()) sum += profile[i];
    y.push_back(sum);
    caps.push_back(costs.back().capacity());
  }
  auto value = [&](std::size_t k, const std::vector<double>& v) {
    return oligopoly::coalition_profit(s, costs[k], v[k], total(v) - v[k]);
  };
  auto marginal = [&](std::size_t k, const std::vector<double>& v) {
    return oligopoly::marginal_profit(s, costs[k], v[k], total(v) - v[k]);
  };
  return assemble(y, caps, value, marginal);
}

FocDiagnostics memberwise_foc_diagnostics(const OligopolySituation& s, const Coalition& coalition,
                                          const StrategyProfile& profile) {
  oligopoly::check_feasible(s, profile);
  const auto& members = coalition.members();
  double outside = 0.0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (!coalition.contains(i)) outside += profile[i];
  }
  std::vector<double> x;
  std::vector<double> caps;
  for (auto i : members) {
    x.push_back(profile[i]);
    caps.push_back(s.capacity(i));
  }
  auto value = [&](std::size_t, const std::vector<double>& v) {
    const double p = oligopoly::price(s, total(v) + outside);
    double profit = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) profit += (p - s.cost(members[j])) * v[j];
    return profit;
  };
  auto marginal = [&](std::size_t k, const std::vector<double>& v) {
    const double all = total(v) + outside;
    return oligopoly::price(s, all) + oligopoly::price_slope(s, all) * total(v) -
           s.cost(members[k]);
  };
  return assemble(x, caps, value, marginal);
}

}  // namespace gammakit::equilibrium
