#pragma once

#include <cstddef>

#include "gammakit/oligopoly/coalition.hpp"
#include "gammakit/oligopoly/cost.hpp"
#include "gammakit/oligopoly/situation.hpp"

namespace gammakit::oligopoly {

/// a - b X^2, clamped at zero only if the situation asks for it.
double price(const OligopolySituation& s, double total_output);
/// dp/dX at total_output (zero where a clamped price is flat).
double price_slope(const OligopolySituation& s, double total_output);

/// Throws std::domain_error naming the first firm outside [0, capacity].
void check_feasible(const OligopolySituation& s, const StrategyProfile& x);

double firm_profit(const OligopolySituation& s, std::size_t firm, const StrategyProfile& x);
/// Sum of member profits under the member-wise outputs of x.
double coalition_profit(const OligopolySituation& s, const Coalition& coalition,
                        const StrategyProfile& x);

/// Profit of a coalition producing y at minimal cost while everybody else
/// produces z in total.
double coalition_profit(const OligopolySituation& s, const PiecewiseLinearCost& cost, double y,
                        double z);
double coalition_profit(const OligopolySituation& s, const Coalition& coalition, double y,
                        double z);

/// d/dy of coalition_profit using the cost slope on the segment starting
/// at y (right derivative at kinks).
double marginal_profit(const OligopolySituation& s, const PiecewiseLinearCost& cost, double y,
                       double z);

struct BestResponse {
  double output;
  double profit;
};

inline constexpr double kArgumentTolerance = 1e-9;

/// Profit-maximising coalition output against opponents' total z.
///
/// Each cost segment is searched by golden section, the result is sharpened
/// by bisection on the sign of the marginal profit (concavity makes it
/// monotone on a segment), and the winner is picked among the segment
/// optima, all breakpoints and both ends of [0, capacity]. Ties go to the
/// smaller output.
BestResponse best_response(const OligopolySituation& s, const PiecewiseLinearCost& cost,
                           double z);
BestResponse best_response(const OligopolySituation& s, const Coalition& actor, double z);

}  // namespace gammakit::oligopoly
