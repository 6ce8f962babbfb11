#include "gammakit/equilibrium/json.hpp"

#include <stdexcept>
#include <string>

namespace gammakit::equilibrium {

ordered_json to_json(const SolverSettings& settings) {
  return {{"damping", settings.damping},
          {"maxIterations", settings.max_iterations},
          {"tolerance", settings.tolerance},
          {"convergence", settings.convergence},
          {"gridStep", settings.grid_step}};
}

ordered_json to_json(const Certificate& c) {
  return {{"epsilon", c.epsilon},     {"passed", c.passed},
          {"gains", c.gains},         {"bestOutputs", c.best_outputs},
          {"gridStep", c.grid_step},  {"tolerance", c.tolerance}};
}

ordered_json to_json(const ScanReport& r) {
  return {{"deltaStar", r.delta_star},
          {"noEquilibriumOnGrid", r.no_equilibrium_on_grid},
          {"argminActorOutputs", r.argmin_actor_outputs},
          {"argminProfile", r.argmin_profile},
          {"upperBounds", r.upper_bounds},
          {"gridPoints", r.grid_points},
          {"profiles", r.profiles},
          {"gridStep", r.grid_step},
          {"tolerance", r.tolerance}};
}

ordered_json to_json(const EquilibriumResult& r) {
  ordered_json j;
  j["status"] = to_string(r.status);
  j["partition"] = r.partition;
  j["profile"] = r.profile;
  j["actorOutputs"] = r.actor_outputs;
  if (r.status == Status::kFound) {
    j["epsilon"] = r.epsilon;
  } else {
    j["deltaStar"] = r.delta_star;
  }
  j["gridStep"] = r.grid_step;
  j["iterations"] = r.iterations;
  j["start"] = r.start;
  j["settings"] = to_json(r.settings);
  j["certificate"] = to_json(r.certificate);
  if (r.scan) j["scan"] = to_json(*r.scan);
  return j;
}

ordered_json to_json(const FocDiagnostics& d) {
  ordered_json one_sided = ordered_json::array();
  for (bool b : d.one_sided) one_sided.push_back(b);
  return {{"residuals", d.residuals},
          {"jacobian", d.jacobian},
          {"singularValues", d.singular_values},
          {"rank", d.rank},
          {"actorCount", d.actor_count},
          {"oneSided", one_sided}};
}

ordered_json to_json(const GammaCharacteristicFunction& gamma, bool with_provenance) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : gamma.entries()) {
    ordered_json item;
    item["coalition"] = e.coalition.one_based();
    if (e.value) {
      item["value"] = *e.value;
    } else {
      item["value"] = "VOID";
    }
    item["settings"] = to_json(gamma.settings());
    if (with_provenance) item["result"] = to_json(e.provenance);
    entries.push_back(std::move(item));
  }
  return {{"firms", gamma.firm_count()}, {"entries", std::move(entries)}};
}

ordered_json to_json(const CoreResult& c) {
  ordered_json j;
  j["nonempty"] = c.nonempty;
  j["minTotal"] = c.min_total;
  j["grandValue"] = c.grand_value;
  if (c.nonempty) j["imputation"] = c.imputation;
  return j;
}

TuGame load_tu_game(std::string_view text) {
  const nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw oligopoly::ConfigError("<document>", "expected a JSON object");
  }
  if (!doc.contains("players") || !doc["players"].is_number_unsigned()) {
    throw oligopoly::ConfigError("players", "expected a positive integer");
  }
  const auto n = doc["players"].get<std::size_t>();
  if (n == 0 || n > kMaxPlayers) throw oligopoly::ConfigError("players", "must be 1 to 12");
  if (!doc.contains("values") || !doc["values"].is_object()) {
    throw oligopoly::ConfigError("values", "expected an object keyed by coalition");
  }
  TuGame game(n);
  std::vector<bool> seen(game.values.size(), false);
  for (const auto& [key, value] : doc["values"].items()) {
    std::uint64_t mask = 0;
    try {
      mask = Coalition::parse(key, n).mask();
    } catch (const std::exception& e) {
      throw oligopoly::ConfigError("values." + key, e.what());
    }
    if (seen[mask]) throw oligopoly::ConfigError("values." + key, "coalition listed twice");
    seen[mask] = true;
    if (value.is_number()) {
      game.set(mask, value.get<double>());
    } else if (!(value.is_string() && value.get<std::string>() == "VOID")) {
      throw oligopoly::ConfigError("values." + key, "expected a number or \"VOID\"");
    }
  }
  for (std::uint64_t mask = 1; mask < seen.size(); ++mask) {
    if (!seen[mask]) {
      throw oligopoly::ConfigError("values", "missing coalition " + Coalition::from_mask(mask, n).to_string());
    }
  }
  return game;
}

}  // namespace gammakit::equilibrium
