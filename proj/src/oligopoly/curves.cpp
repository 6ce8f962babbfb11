#include "gammakit/oligopoly/curves.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gammakit/format.hpp"
#include "gammakit/oligopoly/cost.hpp"
#include "gammakit/oligopoly/market.hpp"

namespace gammakit::oligopoly {

namespace {

constexpr double kDomainSlack = 1e-12;

// The trust formula carries 5735/6 under the root; the outsider formulas
// carry the rounded 955.833. Both are kept as printed.
double kernel(double x) { return std::sqrt(x * x + 5735.0 / 6.0); }
double rounded_kernel(double x) { return std::sqrt(x * x + 955.833); }

double trust_regime(int regime, double x) {
  static const double kConstants[] = {5773.0 / 6.0, 5545.0 / 6.0, 5305.0 / 6.0};
  return (kConstants[regime] - 10.0 * x * x - 10.0 * kernel(x) * x) / 16.0;
}

double outsider4(double x) {
  return 3.0 / 5735.0 * (1927.0 / 8.0 * rounded_kernel(x) - 89849.0 / 125.0 * x);
}

double outsider5(double x) {
  return 3.0 / 5735.0 * (28208.0 / 119.0 * rounded_kernel(x) - 85080.0 / 119.0 * x);
}

}  // namespace

std::string_view to_string(ReferenceCurve curve) {
  switch (curve) {
    case ReferenceCurve::kTrust123: return "trust123";
    case ReferenceCurve::kOutsider4: return "outsider4";
    case ReferenceCurve::kOutsider5: return "outsider5";
  }
  return "";
}

std::optional<ReferenceCurve> reference_curve_from_string(std::string_view name) {
  for (auto c : {ReferenceCurve::kTrust123, ReferenceCurve::kOutsider4, ReferenceCurve::kOutsider5}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

Domain reference_domain(ReferenceCurve curve) {
  if (curve == ReferenceCurve::kTrust123) return {0.0, 4.55};
  return {0.0, 5.0};
}

std::vector<double> reference_boundaries(ReferenceCurve curve) {
  if (curve == ReferenceCurve::kTrust123) return {2.4, 2.55};
  return {};
}

double reference_curve_regime(ReferenceCurve curve, int regime, double x) {
  switch (curve) {
    case ReferenceCurve::kTrust123:
      if (regime < 0 || regime > 2) throw std::out_of_range("trust123 has regimes 0..2");
      return trust_regime(regime, x);
    case ReferenceCurve::kOutsider4:
      return outsider4(x);
    case ReferenceCurve::kOutsider5:
      return outsider5(x);
  }
  return 0.0;
}

CurvePoint reference_curve(ReferenceCurve curve, double x) {
  const Domain d = reference_domain(curve);
  const bool in_domain = x >= d.lo - kDomainSlack && x <= d.hi + kDomainSlack;
  int regime = 0;
  for (double b : reference_boundaries(curve)) {
    if (x > b) ++regime;
  }
  return {reference_curve_regime(curve, regime, x), regime, in_domain};
}

std::size_t grid_size(double lo, double hi, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  if (hi < lo) throw std::invalid_argument("empty sampling domain");
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

double grid_point(double lo, std::size_t k, double step) {
  const double inverse = std::round(1.0 / step);
  const double kk = static_cast<double>(k);
  if (inverse >= 1.0 && std::abs(1.0 / step - inverse) <= 1e-9 * inverse) return lo + kk / inverse;
  return lo + kk * step;
}

Curve make_curve(std::string id, Domain domain, double step,
                 const std::function<double(double)>& f) {
  Curve c;
  c.id = std::move(id);
  c.domain = domain;
  c.step = step;
  const std::size_t n = grid_size(domain.lo, domain.hi, step);
  c.samples.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = std::min(grid_point(domain.lo, k, step), domain.hi);
    c.samples.push_back({x, f(x), 0});
  }
  return c;
}

Curve sample_reference_curve(ReferenceCurve curve, double step) {
  return sample_reference_curve(curve, reference_domain(curve), step);
}

Curve sample_reference_curve(ReferenceCurve curve, Domain domain, double step) {
  Curve c = make_curve(std::string(to_string(curve)), domain, step,
                       [curve](double x) { return reference_curve(curve, x).value; });
  for (auto& s : c.samples) s.regime = reference_curve(curve, s.x).regime;
  c.boundaries = reference_boundaries(curve);
  c.regime_value = [curve](int regime, double x) {
    return reference_curve_regime(curve, regime, x);
  };
  return c;
}

Curve sample_best_response_curve(const OligopolySituation& s, const Coalition& actor,
                                 Domain domain, double step) {
  const PiecewiseLinearCost cost = aggregate_cost(s, actor);
  return make_curve("br(" + actor.to_string() + ")", domain, step,
                    [&](double z) { return best_response(s, cost, z).output; });
}

std::string Curve::to_csv() const {
  std::ostringstream out;
  out << "x,value,regime\r\n";
  for (const auto& s : samples) {
    out << format_double(s.x) << ',' << format_double(s.value) << ',' << s.regime << "\r\n";
  }
  return out.str();
}

std::vector<Jump> discontinuity_scan(const Curve& curve, double threshold) {
  const auto& v = curve.samples;
  if (v.size() < 2) throw std::invalid_argument("discontinuity scan needs at least 2 samples");
  const double h = curve.step > 0.0 ? curve.step : v[1].x - v[0].x;

  std::vector<Jump> jumps;
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    if (v[k + 1].regime != v[k].regime && curve.regime_value) {
      for (double b : curve.boundaries) {
        if (b < v[k].x || b >= v[k + 1].x) continue;
        // Regimes are left-closed at their upper boundary.
        int left = 0;
        for (double other : curve.boundaries) {
          if (b > other) ++left;
        }
        const double size =
            std::abs(curve.regime_value(left, b) - curve.regime_value(left + 1, b));
        if (size > threshold) jumps.push_back({b, size});
      }
      continue;
    }

    const double gap = std::abs(v[k + 1].value - v[k].value);
    double slope_bound = 0.0;
    if (k > 0) slope_bound = std::max(slope_bound, std::abs(v[k].value - v[k - 1].value) / h);
    if (k + 2 < v.size()) {
      slope_bound = std::max(slope_bound, std::abs(v[k + 2].value - v[k + 1].value) / h);
    }
    if (gap > std::max(threshold, 10.0 * h * slope_bound)) {
      jumps.push_back({0.5 * (v[k].x + v[k + 1].x), gap});
    }
  }
  return jumps;
}

}  // namespace gammakit::oligopoly
