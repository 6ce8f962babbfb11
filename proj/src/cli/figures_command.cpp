#include <memory>
#include <string>

#include "gammakit/cli/commands.hpp"
#include "gammakit/cli/csv.hpp"
#include "gammakit/cli/run.hpp"
#include "gammakit/format.hpp"
#include "gammakit/oligopoly/curves.hpp"
#include "gammakit/oligopoly/situation.hpp"

namespace gammakit::cli {

namespace {

namespace ol = gammakit::oligopoly;

void append(std::string& csv, const ol::Curve& c) {
  for (const auto& p : c.samples) {
    csv += csv_row({c.id, format_double(p.x), format_double(p.value), std::to_string(p.regime)});
  }
}

}  // namespace

void add_figures_command(CLI::App& app, Session& session, Action& action) {
  struct Options {
    std::string config;
    bool clamp_price = false;
    double step = ol::kDefaultCurveStep;
  };
  auto o = std::make_shared<Options>();
  auto* cmd = app.add_subcommand("figures", "Reply-curve data for the two reference plots");
  cmd->add_option("--config", o->config, "Situation JSON file")->required();
  cmd->add_flag("--clamp-price", o->clamp_price, "Use max(0, a - bX^2) as the price");
  cmd->add_option("--step", o->step, "Sampling step of every curve")->capture_default_str();
  add_output_option(*cmd, session);
  cmd->get_option("--output")->required();
  cmd->callback([&session, &action, o] {
    action = [&session, o] {
      auto s = ol::load_situation_file(session.input(o->config));
      if (o->clamp_price) s = s.with_clamped_price(true);
      session.manifest().settings["clampPrice"] = s.clamp_price();
      session.manifest().settings["step"] = o->step;

      const ol::Domain others{0.0, 5.0};
      std::string fig1 = csv_row({"curve", "x", "value", "regime"});
      for (std::size_t i = 0; i < s.firm_count(); ++i) {
        append(fig1, ol::sample_best_response_curve(s, ol::Coalition::singleton(i, s.firm_count()),
                                                    others, o->step));
      }

      std::string fig2 = csv_row({"curve", "x", "value", "regime"});
      for (auto id : {ol::ReferenceCurve::kTrust123, ol::ReferenceCurve::kOutsider4,
                      ol::ReferenceCurve::kOutsider5}) {
        append(fig2, ol::sample_reference_curve(id, o->step));
      }
      if (s.firm_count() >= 3) {
        append(fig2, ol::sample_best_response_curve(s, ol::Coalition({0, 1, 2}, s.firm_count()),
                                                    others, o->step));
      }

      session.emit("fig1.csv", fig1);
      session.emit("fig2.csv", fig2);
      return kExitOk;
    };
  });
}

}  // namespace gammakit::cli
