#include <cmath>

#include "doctest.h"
#include "gammakit/equilibrium/foc.hpp"
#include "oracle.hpp"

using namespace gammakit::equilibrium;
using namespace gammakit::oligopoly;

TEST_CASE("residuals vanish at the singleton equilibrium") {
  const auto s = reference_situation();
  const auto x = oracle::singleton_equilibrium(s);
  const auto d = foc_diagnostics(s, Partition::singletons(5), x);
  REQUIRE(d.residuals.size() == 5);
  CHECK(d.actor_count == 5);
  CHECK(d.rank <= d.actor_count);
  CHECK(d.rank == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    if (d.one_sided[i]) continue;
    INFO("firm " << i + 1);
    CHECK(std::abs(d.residuals[i]) <= 1e-4);
  }
  // Firm 2 is pinned at capacity with a positive marginal.
  CHECK(d.one_sided[1]);
  CHECK(d.residuals[1] > 0.0);
}

TEST_CASE("member-wise trust system is dependent") {
  const auto s = reference_situation();
  const Coalition trust = Coalition::parse("1,2,3", 5);
  for (const StrategyProfile& x : {StrategyProfile{1.0, 0.1, 1.0, 2.0, 2.0},
                                   StrategyProfile{2.0, 0.05, 0.5, 3.0, 1.0}}) {
    const auto d = memberwise_foc_diagnostics(s, trust, x);
    CHECK(d.actor_count == 3);
    CHECK(d.rank < 3);
    CHECK(d.rank == 1);
    CHECK(d.residuals[0] - d.residuals[1] == doctest::Approx(2.5 - 0.125).epsilon(1e-6));
    CHECK(d.residuals[1] - d.residuals[2] == doctest::Approx(5.0 - 2.5).epsilon(1e-6));
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(d.jacobian[0][k] == doctest::Approx(d.jacobian[1][k]));
      CHECK(d.jacobian[1][k] == doctest::Approx(d.jacobian[2][k]));
    }
  }
}

TEST_CASE("monopoly optimum") {
  const OligopolySituation s({Rational(10)}, {Rational(0)}, Rational(120), Rational(1));
  const auto d = foc_diagnostics(s, Partition::singletons(1), {std::sqrt(40.0)});
  CHECK(d.rank == 1);
  CHECK(std::abs(d.residuals[0]) <= 1e-6);
  CHECK_FALSE(d.one_sided[0]);
}
