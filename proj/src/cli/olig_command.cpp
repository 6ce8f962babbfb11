#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "gammakit/cli/commands.hpp"
#include "gammakit/cli/csv.hpp"
#include "gammakit/cli/run.hpp"
#include "gammakit/equilibrium/core.hpp"
#include "gammakit/equilibrium/foc.hpp"
#include "gammakit/equilibrium/gamma.hpp"
#include "gammakit/equilibrium/json.hpp"
#include "gammakit/equilibrium/solver.hpp"
#include "gammakit/format.hpp"
#include "gammakit/oligopoly/curves.hpp"
#include "gammakit/oligopoly/market.hpp"
#include "gammakit/oligopoly/situation.hpp"

namespace gammakit::cli {

namespace {

namespace eq = gammakit::equilibrium;
namespace ol = gammakit::oligopoly;
using nlohmann::ordered_json;

struct MarketOptions {
  std::string config;
  bool clamp_price = false;
};

void add_market_options(CLI::App& cmd, MarketOptions& o) {
  cmd.add_option("--config", o.config, "Situation JSON file")->required();
  cmd.add_flag("--clamp-price", o.clamp_price, "Use max(0, a - bX^2) as the price");
}

ol::OligopolySituation load_market(Session& session, const MarketOptions& o) {
  ol::OligopolySituation s = ol::load_situation_file(session.input(o.config));
  if (o.clamp_price) s = s.with_clamped_price(true);
  session.manifest().settings["clampPrice"] = s.clamp_price();
  return s;
}

struct SolverOptions {
  eq::SolverSettings settings;
};

void add_solver_options(CLI::App& cmd, SolverOptions& o) {
  cmd.add_option("--step", o.settings.grid_step, "Certification and scan grid step")
      ->capture_default_str();
  cmd.add_option("--tol", o.settings.tolerance, "Accepted unilateral gain")->capture_default_str();
  cmd.add_option("--damping", o.settings.damping, "Best-reply damping in (0, 1]")
      ->capture_default_str();
  cmd.add_option("--max-iter", o.settings.max_iterations, "Iterations per start")
      ->capture_default_str();
  cmd.add_option("--convergence", o.settings.convergence, "Sup-norm change ending an iteration")
      ->capture_default_str();
}

const eq::SolverSettings& record(Session& session, const SolverOptions& o) {
  o.settings.validate();
  const ordered_json doc = eq::to_json(o.settings);
  for (const auto& [key, value] : doc.items()) session.manifest().settings[key] = value;
  return o.settings;
}

ol::Partition partition_or_singletons(const std::string& text, std::size_t n) {
  return text.empty() ? ol::Partition::singletons(n) : ol::Partition::parse(text, n);
}

std::vector<ol::ReferenceCurve> selected_curves(const std::string& name) {
  if (name == "all") {
    return {ol::ReferenceCurve::kTrust123, ol::ReferenceCurve::kOutsider4,
            ol::ReferenceCurve::kOutsider5};
  }
  auto c = ol::reference_curve_from_string(name);
  if (!c) throw CLI::ValidationError("--curve", "unknown curve " + name);
  return {*c};
}

std::vector<double> parse_profile(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw CLI::ValidationError("--profile", "not a number: '" + item + "'");
    }
    values.push_back(v);
  }
  return values;
}

}  // namespace

void add_olig_command(CLI::App& app, Session& session, Action& action) {
  auto* olig = app.add_subcommand("olig", "Capacity-constrained Cournot market analyses");
  olig->require_subcommand(1);

  {
    struct Options {
      MarketOptions market;
      std::string coalition;
      std::vector<double> z;
      double from = 0.0;
      double to = 0.0;
      double step = 0.0;
    };
    auto o = std::make_shared<Options>();
    auto* cmd = olig->add_subcommand("best-reply", "Best reply of a coalition to the others' total");
    add_market_options(*cmd, o->market);
    cmd->add_option("--coalition", o->coalition, "Members, e.g. \"1,2,3\"")->required();
    auto* z = cmd->add_option("--z", o->z, "Opponents' total output (repeatable)");
    auto* step = cmd->add_option("--step", o->step, "Sample [--from, --to] at this step");
    cmd->add_option("--from", o->from)->capture_default_str();
    cmd->add_option("--to", o->to)->capture_default_str();
    z->excludes(step);
    add_output_option(*cmd, session);
    cmd->callback([&session, &action, o] {
      action = [&session, o] {
        const auto s = load_market(session, o->market);
        const auto actor = ol::Coalition::parse(o->coalition, s.firm_count());
        std::vector<double> zs = o->z;
        if (o->step > 0.0) {
          const std::size_t n = ol::grid_size(o->from, o->to, o->step);
          for (std::size_t k = 0; k < n; ++k) zs.push_back(std::min(ol::grid_point(o->from, k, o->step), o->to));
        }
        if (zs.empty()) throw CLI::ValidationError("--z", "give --z values or a --step range");
        session.manifest().settings["coalition"] = actor.to_string();
        const auto cost = ol::aggregate_cost(s, actor);
        std::string csv = csv_row({"coalition", "z", "output", "profit"});
        for (double z : zs) {
          const auto br = ol::best_response(s, cost, z);
          csv += csv_row({actor.to_string(), format_double(z), format_double(br.output),
                          format_double(br.profit)});
        }
        session.emit("best_reply.csv", csv);
        return kExitOk;
      };
    });
  }

  {
    struct Options {
      std::string curve = "all";
      double step = ol::kDefaultCurveStep;
    };
    auto o = std::make_shared<Options>();
    auto* cmd = olig->add_subcommand("curves", "Sample the published closed-form reply curves");
    cmd->add_option("--curve", o->curve, "trust123, outsider4, outsider5 or all")
        ->capture_default_str();
    cmd->add_option("--step", o->step)->capture_default_str();
    add_output_option(*cmd, session);
    cmd->callback([&session, &action, o] {
      action = [&session, o] {
        session.manifest().settings["curve"] = o->curve;
        session.manifest().settings["step"] = o->step;
        std::string csv = csv_row({"curve", "x", "value", "regime"});
        for (auto id : selected_curves(o->curve)) {
          const auto c = ol::sample_reference_curve(id, o->step);
          for (const auto& p : c.samples) {
            csv += csv_row({c.id, format_double(p.x), format_double(p.value), std::to_string(p.regime)});
          }
        }
        session.emit("curves.csv", csv);
        return kExitOk;
      };
    });
  }

  {
    struct Options {
      std::string curve = "trust123";
      double step = ol::kDefaultCurveStep;
      double threshold = 1e-6;
      MarketOptions market;
      std::string coalition;
    };
    auto o = std::make_shared<Options>();
    auto* cmd = olig->add_subcommand("scan-jumps", "Locate discontinuities of a reply curve");
    cmd->add_option("--curve", o->curve, "trust123, outsider4 or outsider5")->capture_default_str();
    cmd->add_option("--step", o->step)->capture_default_str();
    cmd->add_option("--threshold", o->threshold, "Smallest reported jump")->capture_default_str();
    auto* config = cmd->add_option("--config", o->market.config,
                                   "Scan the numeric best reply of --coalition instead");
    cmd->add_flag("--clamp-price", o->market.clamp_price);
    cmd->add_option("--coalition", o->coalition)->needs(config);
    add_output_option(*cmd, session);
    cmd->callback([&session, &action, o] {
      action = [&session, o] {
        session.manifest().settings["step"] = o->step;
        session.manifest().settings["threshold"] = o->threshold;
        ol::Curve curve;
        if (!o->market.config.empty()) {
          const auto s = load_market(session, o->market);
          if (o->coalition.empty()) throw CLI::ValidationError("--coalition", "required with --config");
          const auto actor = ol::Coalition::parse(o->coalition, s.firm_count());
          session.manifest().settings["coalition"] = actor.to_string();
          curve = ol::sample_best_response_curve(s, actor, {0.0, 5.0}, o->step);
        } else {
          const auto id = selected_curves(o->curve).front();
          session.manifest().settings["curve"] = o->curve;
          curve = ol::sample_reference_curve(id, o->step);
        }
        std::string csv = csv_row({"curve", "location", "size"});
        for (const auto& j : ol::discontinuity_scan(curve, o->threshold)) {
          csv += csv_row({curve.id, format_double(j.location), format_double(j.size)});
        }
        session.emit("jumps.csv", csv);
        return kExitOk;
      };
    });
  }

  {
    struct Options {
      MarketOptions market;
      SolverOptions solver;
      std::string partition;
    };
    auto o = std::make_shared<Options>();
    auto* cmd = olig->add_subcommand("solve", "Partial agreement equilibrium for a partition");
    add_market_options(*cmd, o->market);
    add_solver_options(*cmd, o->solver);
    cmd->add_option("--partition", o->partition, "Blocks, e.g. \"1,2,3|4|5\" (default: all alone)");
    add_output_option(*cmd, session);
    cmd->callback([&session, &action, o] {
      action = [&session, o] {
        const auto s = load_market(session, o->market);
        const auto& settings = record(session, o->solver);
        const auto p = partition_or_singletons(o->partition, s.firm_count());
        session.manifest().settings["partition"] = p.to_string();
        const auto r = eq::partial_agreement_equilibrium(s, p, settings);
        session.emit("equilibrium.json", eq::to_json(r).dump(2) + "\n");
        return r.status == eq::Status::kFound ? kExitOk : kExitNegative;
      };
    });
  }

  {
    struct Options {
      MarketOptions market;
      SolverOptions solver;
      std::size_t jobs = 1;
    };
    auto o = std::make_shared<Options>();
    auto* cmd = olig->add_subcommand("gamma", "Gamma characteristic function of every coalition");
    add_market_options(*cmd, o->market);
    add_solver_options(*cmd, o->solver);
    cmd->add_option("--jobs", o->jobs, "Parallel coalition solves")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_option(*cmd, session);
    cmd->callback([&session, &action, o] {
      action = [&session, o] {
        const auto s = load_market(session, o->market);
        const auto g = eq::gamma_characteristic(s, record(session, o->solver), o->jobs);
        session.emit("gamma.json", eq::to_json(g).dump(2) + "\n");
        return g.void_count() == 0 ? kExitOk : kExitNegative;
      };
    });
  }

  {
    struct Options {
      MarketOptions market;
      SolverOptions solver;
      std::size_t jobs = 1;
      std::string game;
    };
    auto o = std::make_shared<Options>();
    auto* cmd = olig->add_subcommand("core", "Core nonemptiness of the gamma game or a TU game file");
    auto* config = cmd->add_option("--config", o->market.config, "Situation JSON file");
    cmd->add_flag("--clamp-price", o->market.clamp_price);
    auto* game = cmd->add_option("--game", o->game,
                                 "TU game JSON: {\"players\": n, \"values\": {\"1,2\": v, ...}}");
    config->excludes(game);
    add_solver_options(*cmd, o->solver);
    cmd->add_option("--jobs", o->jobs)->check(CLI::PositiveNumber)->capture_default_str();
    add_output_option(*cmd, session);
    cmd->callback([&session, &action, o] {
      action = [&session, o]() -> int {
        std::optional<eq::TuGame> game;
        ordered_json doc;
        if (!o->game.empty()) {
          game = eq::load_tu_game(read_file(session.input(o->game)));
        } else if (!o->market.config.empty()) {
          const auto s = load_market(session, o->market);
          const auto g = eq::gamma_characteristic(s, record(session, o->solver), o->jobs);
          doc["gamma"] = eq::to_json(g, false);
          if (g.void_count() > 0) {
            doc["core"] = "undefined: VOID entries";
            session.emit("core.json", doc.dump(2) + "\n");
            return kExitNegative;
          }
          game = g.game();
        } else {
          throw CLI::ValidationError("core", "give --config or --game");
        }
        for (std::size_t m = 1; m < game->values.size(); ++m) {
          if (game->values[m]) continue;
          doc["core"] = "undefined: VOID entries";
          session.emit("core.json", doc.dump(2) + "\n");
          return kExitNegative;
        }
        const auto c = eq::core_nonempty(*game);
        doc["core"] = eq::to_json(c);
        session.emit("core.json", doc.dump(2) + "\n");
        return c.nonempty ? kExitOk : kExitNegative;
      };
    });
  }

  {
    struct Options {
      MarketOptions market;
      SolverOptions solver;
      std::string partition;
      std::string profile;
      std::string memberwise;
    };
    auto o = std::make_shared<Options>();
    auto* cmd = olig->add_subcommand("foc", "First-order condition residuals and Jacobian rank");
    add_market_options(*cmd, o->market);
    add_solver_options(*cmd, o->solver);
    cmd->add_option("--partition", o->partition, "Blocks (default: all alone)");
    cmd->add_option("--profile", o->profile,
                    "Member outputs \"x1,...,xn\" (default: the solved equilibrium)");
    cmd->add_option("--memberwise", o->memberwise,
                    "Write the system of this coalition in its members' outputs");
    add_output_option(*cmd, session);
    cmd->callback([&session, &action, o] {
      action = [&session, o] {
        const auto s = load_market(session, o->market);
        const auto p = partition_or_singletons(o->partition, s.firm_count());
        session.manifest().settings["partition"] = p.to_string();
        ol::StrategyProfile x;
        if (!o->profile.empty()) {
          x = parse_profile(o->profile);
        } else {
          x = eq::partial_agreement_equilibrium(s, p, record(session, o->solver)).profile;
        }
        ordered_json doc;
        doc["profile"] = x;
        if (!o->memberwise.empty()) {
          const auto c = ol::Coalition::parse(o->memberwise, s.firm_count());
          session.manifest().settings["memberwise"] = c.to_string();
          doc["coalition"] = c.one_based();
          doc["diagnostics"] = eq::to_json(eq::memberwise_foc_diagnostics(s, c, x));
        } else {
          doc["partition"] = p.to_string();
          doc["diagnostics"] = eq::to_json(eq::foc_diagnostics(s, p, x));
        }
        session.emit("foc.json", doc.dump(2) + "\n");
        return kExitOk;
      };
    });
  }
}

}  // namespace gammakit::cli
