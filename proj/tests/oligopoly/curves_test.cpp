#include <cmath>

#include "doctest.h"
#include "gammakit/oligopoly/curves.hpp"

using namespace gammakit::oligopoly;

namespace {

double root(double x) { return std::sqrt(x * x + 5735.0 / 6.0); }
double rounded_root(double x) { return std::sqrt(x * x + 955.833); }
double trust(double k, double x) { return (k - 10 * x * x - 10 * root(x) * x) / 16.0; }

}  // namespace

TEST_CASE("printed closed forms, by hand") {
  CHECK(reference_curve(ReferenceCurve::kTrust123, 0.0).value == doctest::Approx(5773.0 / 96).epsilon(1e-15));
  CHECK(std::abs(reference_curve(ReferenceCurve::kTrust123, 0.0).value - 60.1354) < 1e-4);
  CHECK(std::abs(reference_curve(ReferenceCurve::kOutsider4, 0.0).value - 3.8955) < 1e-4);
  CHECK(std::abs(reference_curve(ReferenceCurve::kOutsider5, 0.0).value - 3.8336) < 1e-4);

  CHECK(reference_curve(ReferenceCurve::kTrust123, 2.4).regime == 0);
  CHECK(reference_curve(ReferenceCurve::kTrust123, std::nextafter(2.4, 3.0)).regime == 1);
  CHECK(reference_curve(ReferenceCurve::kTrust123, 2.55).regime == 1);
  CHECK(reference_curve(ReferenceCurve::kTrust123, 4.0).regime == 2);
  CHECK(std::abs(reference_curve(ReferenceCurve::kTrust123, 4.0).value - trust(5305.0 / 6, 4.0)) < 1e-12);
  CHECK(std::abs(reference_curve(ReferenceCurve::kOutsider4, 1.5).value -
                 3.0 / 5735 * (1927.0 / 8 * rounded_root(1.5) - 89849.0 / 125 * 1.5)) < 1e-12);
  CHECK(std::abs(reference_curve(ReferenceCurve::kOutsider5, 1.5).value -
                 3.0 / 5735 * (28208.0 / 119 * rounded_root(1.5) - 85080.0 / 119 * 1.5)) < 1e-12);

  CHECK_FALSE(reference_curve(ReferenceCurve::kTrust123, 4.6).in_domain);
  CHECK(reference_curve(ReferenceCurve::kOutsider4, 5.0).in_domain);
  CHECK_FALSE(reference_curve(ReferenceCurve::kOutsider4, 5.1).in_domain);
  CHECK(reference_curve_from_string("outsider5") == ReferenceCurve::kOutsider5);
  CHECK_FALSE(reference_curve_from_string("nope").has_value());
}

TEST_CASE("jumps of trust123") {
  const auto jumps = discontinuity_scan(sample_reference_curve(ReferenceCurve::kTrust123), 1e-6);
  REQUIRE(jumps.size() == 2);
  CHECK(jumps[0].location == 2.4);
  CHECK(std::abs(jumps[0].size - 228.0 / 96) < 1e-9);
  CHECK(jumps[1].location == 2.55);
  CHECK(std::abs(jumps[1].size - 240.0 / 96) < 1e-9);
}

TEST_CASE("smooth and constant curves have no jumps") {
  CHECK(discontinuity_scan(sample_reference_curve(ReferenceCurve::kOutsider4), 1e-6).empty());
  CHECK(discontinuity_scan(sample_reference_curve(ReferenceCurve::kOutsider5), 1e-6).empty());
  CHECK(discontinuity_scan(make_curve("flat", {0, 1}, 0.01, [](double) { return 3.0; }), 0.0).empty());
  CHECK_THROWS(discontinuity_scan(make_curve("dot", {0, 0}, 0.1, [](double) { return 0.0; }), 0.0));
}

TEST_CASE("a sampled step function is caught between samples") {
  const auto c = make_curve("step", {0, 2}, 0.01, [](double x) { return x < 1.005 ? x : x + 1.0; });
  const auto jumps = discontinuity_scan(c, 0.1);
  REQUIRE(jumps.size() == 1);
  CHECK(jumps[0].location == doctest::Approx(1.005));
}

TEST_CASE("sampling grid and CSV") {
  const auto c = sample_reference_curve(ReferenceCurve::kTrust123, 1e-3);
  CHECK(c.samples.size() == 4551);
  CHECK(c.samples.back().x == 4.55);
  for (std::size_t k = 1; k < c.samples.size(); ++k) REQUIRE(c.samples[k].x > c.samples[k - 1].x);
  const std::string csv = c.to_csv();
  CHECK(csv.rfind("x,value,regime\r\n0,", 0) == 0);
  CHECK(csv.find("2.401,") != std::string::npos);
}

TEST_CASE("numeric best-reply curve of the trust") {
  const auto s = reference_situation();
  const auto c = sample_best_response_curve(s, Coalition::parse("1,2,3", 5), {0.0, 5.0}, 0.01);
  CHECK(c.id == "br(1,2,3)");
  CHECK(c.samples.size() == 501);
  for (std::size_t k = 1; k < c.samples.size(); ++k) {
    REQUIRE(c.samples[k].value <= c.samples[k - 1].value + 1e-9);
  }
}
