#include "gammakit/oligopoly/situation.hpp"

#include <fstream>

namespace gammakit::oligopoly {

namespace {

Rational read_number(const nlohmann::json& value, const std::string& field) {
  try {
    if (value.is_string()) return Rational::parse(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    if (value.is_number()) return Rational::from_double(value.get<double>());
  } catch (const std::exception& e) {
    throw ConfigError(field, e.what());
  }
  throw ConfigError(field, "expected a number or a rational string like \"1/24\"");
}

std::vector<Rational> read_array(const nlohmann::json& doc, const std::string& field) {
  if (!doc.contains(field)) throw ConfigError(field, "missing");
  const auto& arr = doc.at(field);
  if (!arr.is_array()) throw ConfigError(field, "expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(read_number(arr[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<double> to_doubles(const std::vector<Rational>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(r.to_double());
  return out;
}

nlohmann::ordered_json exact_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return r.to_string();
}

}  // namespace

OligopolySituation::OligopolySituation(std::vector<Rational> capacities,
                                       std::vector<Rational> costs, Rational a, Rational b)
    : exact_capacities_(std::move(capacities)),
      exact_costs_(std::move(costs)),
      exact_a_(a),
      exact_b_(b) {
  if (exact_capacities_.empty()) throw ConfigError("capacities", "at least one firm required");
  if (exact_capacities_.size() != exact_costs_.size()) {
    throw ConfigError("costs", "dimension mismatch: " + std::to_string(exact_costs_.size()) +
                                   " costs for " + std::to_string(exact_capacities_.size()) +
                                   " capacities");
  }
  const Rational zero(0);
  for (std::size_t i = 0; i < exact_capacities_.size(); ++i) {
    if (exact_capacities_[i] < zero) {
      throw ConfigError("capacities[" + std::to_string(i) + "]", "must be nonnegative");
    }
    if (exact_costs_[i] < zero) {
      throw ConfigError("costs[" + std::to_string(i) + "]", "must be nonnegative");
    }
  }
  if (!(zero < exact_a_)) throw ConfigError("a", "must be positive");
  if (!(zero < exact_b_)) throw ConfigError("b", "must be positive");
  capacities_ = to_doubles(exact_capacities_);
  costs_ = to_doubles(exact_costs_);
  a_ = exact_a_.to_double();
  b_ = exact_b_.to_double();
}

OligopolySituation OligopolySituation::with_clamped_price(bool clamp) const {
  OligopolySituation copy = *this;
  copy.clamp_price_ = clamp;
  return copy;
}

OligopolySituation OligopolySituation::with_capacity(std::size_t firm, Rational capacity) const {
  std::vector<Rational> caps = exact_capacities_;
  caps.at(firm) = capacity;
  OligopolySituation copy(std::move(caps), exact_costs_, exact_a_, exact_b_);
  copy.clamp_price_ = clamp_price_;
  return copy;
}

nlohmann::ordered_json OligopolySituation::to_json() const {
  nlohmann::ordered_json doc;
  doc["n"] = firm_count();
  doc["capacities"] = nlohmann::ordered_json::array();
  doc["costs"] = nlohmann::ordered_json::array();
  for (const auto& c : exact_capacities_) doc["capacities"].push_back(exact_json(c));
  for (const auto& c : exact_costs_) doc["costs"].push_back(exact_json(c));
  doc["a"] = exact_json(exact_a_);
  doc["b"] = exact_json(exact_b_);
  doc["clampPrice"] = clamp_price_;
  return doc;
}

OligopolySituation load_situation(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("<document>", "expected a JSON object");
  auto capacities = read_array(doc, "capacities");
  auto costs = read_array(doc, "costs");
  if (doc.contains("n")) {
    const auto& n = doc.at("n");
    if (!n.is_number_unsigned()) throw ConfigError("n", "expected a positive integer");
    const auto count = n.get<std::size_t>();
    if (capacities.size() != count) {
      throw ConfigError("capacities", "dimension mismatch: " +
                                          std::to_string(capacities.size()) +
                                          " entries for n = " + std::to_string(count));
    }
    if (costs.size() != count) {
      throw ConfigError("costs", "dimension mismatch: " + std::to_string(costs.size()) +
                                     " entries for n = " + std::to_string(count));
    }
  }
  for (const char* key : {"a", "b"}) {
    if (!doc.contains(key)) throw ConfigError(key, "missing");
  }
  OligopolySituation s(std::move(capacities), std::move(costs), read_number(doc.at("a"), "a"),
                       read_number(doc.at("b"), "b"));
  if (doc.contains("clampPrice")) {
    const auto& clamp = doc.at("clampPrice");
    if (!clamp.is_boolean()) throw ConfigError("clampPrice", "expected true or false");
    s = s.with_clamped_price(clamp.get<bool>());
  }
  return s;
}

OligopolySituation load_situation_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("<document>", std::string("invalid JSON: ") + e.what());
  }
  return load_situation(doc);
}

OligopolySituation reference_situation() {
  return OligopolySituation(
      {Rational::parse("2.4"), Rational::parse("0.15"), Rational(2), Rational(15), Rational(20)},
      {Rational(1, 8), Rational(5, 2), Rational(5), Rational(1, 24), Rational(1)}, Rational(120),
      Rational(1));
}

}  // namespace gammakit::oligopoly
