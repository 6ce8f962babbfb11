#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gammakit/oligopoly/coalition.hpp"
#include "gammakit/oligopoly/situation.hpp"

namespace gammakit::oligopoly {

/// Closed-form best-reply curves of the five-firm reference market, as
/// published for the coalition structure {1,2,3} | 4 | 5. They are evaluated
/// exactly as written; their parameterisation is not reinterpreted here.
enum class ReferenceCurve { kTrust123, kOutsider4, kOutsider5 };

std::string_view to_string(ReferenceCurve curve);
std::optional<ReferenceCurve> reference_curve_from_string(std::string_view name);

struct CurvePoint {
  double value;
  int regime;      // 0, 1 or 2 for kTrust123; always 0 otherwise
  bool in_domain;  // false outside the printed domain
};

struct Domain {
  double lo;
  double hi;
};

Domain reference_domain(ReferenceCurve curve);
CurvePoint reference_curve(ReferenceCurve curve, double x);
/// The formula of one regime evaluated at x, regardless of which regime x
/// belongs to. Used for one-sided limits at regime boundaries.
double reference_curve_regime(ReferenceCurve curve, int regime, double x);
/// Regime boundaries; the left regime is closed at each of them.
std::vector<double> reference_boundaries(ReferenceCurve curve);

struct CurveSample {
  double x;
  double value;
  int regime;
};

/// Uniformly sampled curve. Piecewise-defined curves carry their regime
/// boundaries and a per-regime evaluator so jumps can be measured exactly.
struct Curve {
  std::string id;
  std::vector<CurveSample> samples;
  Domain domain{0.0, 0.0};
  double step = 0.0;
  std::vector<double> boundaries;
  std::function<double(int regime, double x)> regime_value;

  /// RFC 4180 CSV with header x,value,regime.
  std::string to_csv() const;
};

inline constexpr double kDefaultCurveStep = 1e-3;

/// Number of grid points from lo to hi (inclusive) at the given step.
std::size_t grid_size(double lo, double hi, double step);
/// lo + k * step, computed as lo + k / m when step is 1/m for an integer m
/// so that decimal steps land on the nearest double of each grid value.
double grid_point(double lo, std::size_t k, double step);

Curve sample_reference_curve(ReferenceCurve curve, double step = kDefaultCurveStep);
Curve sample_reference_curve(ReferenceCurve curve, Domain domain, double step);

/// Numeric best reply of `actor` as a function of the others' total output.
Curve sample_best_response_curve(const OligopolySituation& s, const Coalition& actor,
                                 Domain domain, double step = kDefaultCurveStep);

Curve make_curve(std::string id, Domain domain, double step,
                 const std::function<double(double)>& f);

struct Jump {
  double location;
  double size;  // |left limit - right limit|
};

/// Gaps between consecutive samples larger than
/// max(threshold, 10 * step * local slope bound), where the slope bound is
/// taken from the neighbouring sample intervals. Regime changes on curves
/// with an evaluator are resolved exactly at the boundary instead.
std::vector<Jump> discontinuity_scan(const Curve& curve, double threshold);

}  // namespace gammakit::oligopoly
