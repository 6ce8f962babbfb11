#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammakit/oligopoly/rational.hpp"
#include "json.hpp"

namespace gammakit::oligopoly {

/// Invalid situation document. `field` names the offending key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Capacity-constrained Cournot market with linear individual costs and
/// inverse demand p(X) = a - b X^2. Firms are indexed from 0 internally;
/// everything user-facing counts from 1.
class OligopolySituation {
 public:
  OligopolySituation(std::vector<Rational> capacities, std::vector<Rational> costs,
                     Rational a, Rational b);

  std::size_t firm_count() const { return capacities_.size(); }
  double capacity(std::size_t firm) const { return capacities_.at(firm); }
  double cost(std::size_t firm) const { return costs_.at(firm); }
  const Rational& exact_capacity(std::size_t firm) const { return exact_capacities_.at(firm); }
  const Rational& exact_cost(std::size_t firm) const { return exact_costs_.at(firm); }
  const std::vector<double>& capacities() const { return capacities_; }
  const std::vector<double>& costs() const { return costs_; }
  double a() const { return a_; }
  double b() const { return b_; }

  /// When set, price() returns max(0, a - b X^2). Off by default.
  bool clamp_price() const { return clamp_price_; }
  OligopolySituation with_clamped_price(bool clamp) const;
  OligopolySituation with_capacity(std::size_t firm, Rational capacity) const;

  nlohmann::ordered_json to_json() const;

 private:
  std::vector<Rational> exact_capacities_;
  std::vector<Rational> exact_costs_;
  Rational exact_a_;
  Rational exact_b_;
  std::vector<double> capacities_;
  std::vector<double> costs_;
  double a_ = 0.0;
  double b_ = 0.0;
  bool clamp_price_ = false;
};

/// Document shape: {"capacities": [...], "costs": [...], "a": x, "b": x}
/// with an optional "n" and optional "clampPrice". Numbers may be JSON
/// numbers or exact strings such as "1/24".
OligopolySituation load_situation(const nlohmann::json& doc);
OligopolySituation load_situation_file(const std::filesystem::path& path);

/// The five-firm market used throughout the test suite and the CLI docs.
OligopolySituation reference_situation();

}  // namespace gammakit::oligopoly
