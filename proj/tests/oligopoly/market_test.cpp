#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "gammakit/oligopoly/market.hpp"

using namespace gammakit::oligopoly;

namespace {

// Stationary point of (a - b(x+z)^2 - c) x, clamped to [0, w].
double closed_form_reply(double a, double b, double c, double w, double z) {
  const double root = (-2.0 * z + std::sqrt(z * z + 3.0 * (a - c) / b)) / 3.0;
  return std::clamp(root, 0.0, w);
}

}  // namespace

TEST_CASE("price and profits") {
  const auto s = reference_situation();
  CHECK(price(s, 0.0) == 120.0);
  CHECK(price(s, 10.0) == 20.0);
  CHECK(price(s, 11.0) == -1.0);
  CHECK(s.with_clamped_price(true).clamp_price());
  CHECK(price(s.with_clamped_price(true), 11.0) == 0.0);
  CHECK_THROWS(price(s, -1.0));
  for (double x = 0.0; x < 20.0; x += 0.5) REQUIRE(price(s, x) > price(s, x + 0.5));

  CHECK(firm_profit(s, 4, {0, 0, 0, 0, 2}) == doctest::Approx(230.0));
  CHECK(firm_profit(s, 0, {2.4, 0, 0, 0, 0}) == doctest::Approx(273.876));
  CHECK(firm_profit(s, 2, {2.4, 0, 0, 0, 0}) == 0.0);
  CHECK_THROWS(firm_profit(s, 0, {2.5, 0, 0, 0, 0}));
  CHECK_THROWS(firm_profit(s, 0, {1, 0, 0, 0}));

  const Coalition trust = Coalition::parse("1,2,3", 5);
  CHECK(coalition_profit(s, trust, 2.4, 0.0) == doctest::Approx(273.876));
  CHECK(coalition_profit(s, trust, 0.0, 3.0) == 0.0);
  CHECK(coalition_profit(s, Coalition::singleton(3, 5), 1.0, 0.0) ==
        doctest::Approx(120.0 - 1.0 - 1.0 / 24));
}

TEST_CASE("best replies match the closed form") {
  const auto s = reference_situation();
  for (std::size_t i = 0; i < 5; ++i) {
    for (int k = 0; k <= 20; ++k) {
      const double z = 0.5 * k;
      const double expected = closed_form_reply(s.a(), s.b(), s.cost(i), s.capacity(i), z);
      INFO("firm " << i + 1 << " z " << z);
      REQUIRE(std::abs(best_response(s, Coalition::singleton(i, 5), z).output - expected) <= 1e-6);
    }
  }
  CHECK(best_response(s, Coalition::singleton(3, 5), 0.0).output == doctest::Approx(6.3234572).epsilon(1e-7));
  CHECK(best_response(s, Coalition::singleton(1, 5), 0.0).output == 0.15);
  CHECK(best_response(s, Coalition::singleton(0, 5), 11.0).output == 0.0);
}

TEST_CASE("coalition profit is concave in own output") {
  const auto s = reference_situation();
  const double h = 1e-4;
  for (std::uint64_t mask : {7u, 31u, 24u, 5u}) {
    const auto cost = aggregate_cost(s, Coalition::from_mask(mask, 5));
    for (double z : {0.0, 1.0, 3.5}) {
      for (double y = h; y + h <= cost.capacity(); y += cost.capacity() / 97.0) {
        if (y + z <= 0.0) continue;
        const double d2 = coalition_profit(s, cost, y - h, z) + coalition_profit(s, cost, y + h, z) -
                          2.0 * coalition_profit(s, cost, y, z);
        REQUIRE(d2 <= 1e-6);
      }
    }
  }
}

TEST_CASE("best reply beats every grid point") {
  const auto s = reference_situation();
  for (std::uint64_t mask : {7u, 31u, 3u, 16u}) {
    const auto cost = aggregate_cost(s, Coalition::from_mask(mask, 5));
    for (double z : {0.0, 0.7, 2.0, 5.0, 9.0}) {
      const auto br = best_response(s, cost, z);
      REQUIRE(br.profit == doctest::Approx(coalition_profit(s, cost, br.output, z)));
      for (double y = 0.0; y <= cost.capacity(); y += 1e-3) {
        REQUIRE(br.profit >= coalition_profit(s, cost, y, z) - 1e-8);
      }
    }
  }
}

TEST_CASE("aggregate and member-wise maximisation agree") {
  const auto s = reference_situation();
  const Coalition trust = Coalition::parse("1,2,3", 5);
  const double h = 0.05;
  for (int z = 0; z <= 5; ++z) {
    double best = -1e300;
    for (int i = 0; i * h <= 2.4 + 1e-12; ++i) {
      for (int j = 0; j * h <= 0.15 + 1e-12; ++j) {
        for (int k = 0; k * h <= 2.0 + 1e-12; ++k) {
          const double x1 = i * h, x2 = j * h, x3 = k * h;
          const double p = s.a() - s.b() * std::pow(x1 + x2 + x3 + z, 2);
          best = std::max(best, (p - s.cost(0)) * x1 + (p - s.cost(1)) * x2 + (p - s.cost(2)) * x3);
        }
      }
    }
    const double aggregate = best_response(s, trust, z).profit;
    INFO("z " << z);
    REQUIRE(aggregate >= best - 1e-9);
    REQUIRE(aggregate - best <= 2e-2);
  }
}

TEST_CASE("marginal profit is the derivative inside segments") {
  const auto s = reference_situation();
  const auto cost = aggregate_cost(s, Coalition::parse("1,2,3", 5));
  const double h = 1e-6;
  for (double y : {0.5, 2.0, 2.5, 3.0, 4.2}) {
    const double fd = (coalition_profit(s, cost, y + h, 1.0) - coalition_profit(s, cost, y - h, 1.0)) / (2 * h);
    CHECK(marginal_profit(s, cost, y, 1.0) == doctest::Approx(fd).epsilon(1e-6));
  }
}
