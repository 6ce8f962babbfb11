#pragma once

#include <string_view>

#include "gammakit/equilibrium/core.hpp"
#include "gammakit/equilibrium/foc.hpp"
#include "gammakit/equilibrium/gamma.hpp"
#include "gammakit/equilibrium/solver.hpp"
#include "json.hpp"

namespace gammakit::equilibrium {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const SolverSettings& settings);
ordered_json to_json(const Certificate& certificate);
ordered_json to_json(const ScanReport& report);
/// Firm and block indices are 1-based; "epsilon" appears for found results
/// and "deltaStar" for not-found ones.
ordered_json to_json(const EquilibriumResult& result);
ordered_json to_json(const FocDiagnostics& diagnostics);
/// {"entries": [{"coalition": [...], "value": x | "VOID", "settings": {...}}]}
ordered_json to_json(const GammaCharacteristicFunction& gamma, bool with_provenance = true);
ordered_json to_json(const CoreResult& core);

/// {"players": n, "values": {"1": v, "1,2": v, ...}} with 1-based members;
/// a value may be "VOID". Every nonempty coalition must be present.
TuGame load_tu_game(std::string_view text);

}  // namespace gammakit::equilibrium
