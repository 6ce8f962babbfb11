#include <memory>
#include <string>
#include <vector>

#include "gammakit/cli/commands.hpp"
#include "gammakit/cli/run.hpp"
#include "gammakit/logic/identities.hpp"
#include "gammakit/logic/parser.hpp"
#include "gammakit/logic/semantics.hpp"

namespace gammakit::cli {

namespace {

using logic::Assignment;
using logic::Formula;
using nlohmann::ordered_json;

ordered_json assignment_json(const Assignment& a) {
  ordered_json j = ordered_json::object();
  for (const auto& [atom, value] : a) j[atom] = value ? "T" : "F";
  return j;
}

std::vector<Formula> parse_all(const std::vector<std::string>& texts) {
  std::vector<Formula> formulas;
  for (const auto& t : texts) formulas.push_back(logic::parse(t));
  return formulas;
}

struct LogicOptions {
  std::string formula;
  std::string other;
  std::vector<std::string> list;
  std::vector<std::string> context;
};

std::shared_ptr<std::string> add_format(CLI::App& cmd, std::vector<std::string> choices) {
  auto format = std::make_shared<std::string>(choices.front());
  cmd.add_option("--format", *format, "Output format")
      ->check(CLI::IsMember(choices))
      ->capture_default_str();
  return format;
}

}  // namespace

void add_logic_command(CLI::App& app, Session& session, Action& action) {
  auto* logic_cmd = app.add_subcommand("logic", "Propositional logic checks");
  logic_cmd->require_subcommand(1);
  auto opts = std::make_shared<LogicOptions>();
  auto& o = *opts;

  auto* table = logic_cmd->add_subcommand("table", "Truth table of a formula");
  table->add_option("formula", o.formula, "Formula, e.g. \"A -> B\"")->required();
  auto table_format = add_format(*table, {"csv", "json"});
  add_output_option(*table, session);
  table->callback([&session, &action, opts, table_format] {
    action = [&session, opts, table_format] {
      const auto t = logic::truth_table(logic::parse(opts->formula));
      session.manifest().settings["format"] = *table_format;
      if (*table_format == "csv") {
        session.emit("table.csv", t.to_csv());
      } else {
        session.emit("table.json", t.to_json() + "\n");
      }
      return kExitOk;
    };
  });

  auto* classify = logic_cmd->add_subcommand("classify", "Tautology, contradiction or contingent");
  classify->add_option("formula", o.formula)->required();
  auto classify_format = add_format(*classify, {"text", "json"});
  add_output_option(*classify, session);
  classify->callback([&session, &action, opts, classify_format] {
    action = [&session, opts, classify_format] {
      const auto c = logic::classify(logic::parse(opts->formula));
      session.manifest().settings["format"] = *classify_format;
      if (*classify_format == "json") {
        ordered_json j{{"formula", opts->formula}, {"kind", logic::to_string(c.kind)}};
        j["falsifying"] = c.falsifying ? assignment_json(*c.falsifying) : ordered_json(nullptr);
        j["satisfying"] = c.satisfying ? assignment_json(*c.satisfying) : ordered_json(nullptr);
        session.emit("classify.json", j.dump(2) + "\n");
      } else {
        std::string line = logic::to_string(c.kind);
        if (c.kind == logic::Kind::kContingent) {
          line += ", falsified by " + logic::format_assignment(*c.falsifying);
        }
        session.emit("classify.txt", line + "\n");
      }
      return c.kind == logic::Kind::kTautology ? kExitOk : kExitNegative;
    };
  });

  auto* equiv = logic_cmd->add_subcommand("equiv", "Semantic equivalence of two formulas");
  equiv->add_option("left", o.formula)->required();
  equiv->add_option("right", o.other)->required();
  auto equiv_format = add_format(*equiv, {"text", "json"});
  add_output_option(*equiv, session);
  equiv->callback([&session, &action, opts, equiv_format] {
    action = [&session, opts, equiv_format] {
      const Formula f = logic::parse(opts->formula);
      const Formula g = logic::parse(opts->other);
      const auto diff = logic::distinguishing_assignment(f, g);
      session.manifest().settings["format"] = *equiv_format;
      if (*equiv_format == "json") {
        ordered_json j{{"left", opts->formula}, {"right", opts->other}, {"equivalent", !diff}};
        j["countermodel"] = diff ? assignment_json(*diff) : ordered_json(nullptr);
        session.emit("equiv.json", j.dump(2) + "\n");
      } else if (diff) {
        session.emit("equiv.txt", "not equivalent, differ at " + logic::format_assignment(*diff) + "\n");
      } else {
        session.emit("equiv.txt", "equivalent\n");
      }
      return diff ? kExitNegative : kExitOk;
    };
  });

  auto* ent = logic_cmd->add_subcommand(
      "entails", "Semantic entailment; the last formula is the conclusion");
  ent->add_option("formulas", o.list, "Premises followed by the conclusion")->required();
  auto ent_format = add_format(*ent, {"text", "json"});
  add_output_option(*ent, session);
  ent->callback([&session, &action, opts, ent_format] {
    action = [&session, opts, ent_format] {
      auto formulas = parse_all(opts->list);
      const Formula conclusion = formulas.back();
      formulas.pop_back();
      const auto e = logic::entails(formulas, conclusion);
      session.manifest().settings["format"] = *ent_format;
      if (*ent_format == "json") {
        ordered_json j;
        j["premises"] = std::vector<std::string>(opts->list.begin(), opts->list.end() - 1);
        j["conclusion"] = opts->list.back();
        j["entailed"] = e.holds;
        j["countermodel"] = e.countermodel ? assignment_json(*e.countermodel) : ordered_json(nullptr);
        session.emit("entails.json", j.dump(2) + "\n");
      } else if (e.holds) {
        session.emit("entails.txt", "entailed\n");
      } else {
        session.emit("entails.txt",
                     "not entailed, countermodel " + logic::format_assignment(*e.countermodel) + "\n");
      }
      return e.holds ? kExitOk : kExitNegative;
    };
  });

  auto* ded = logic_cmd->add_subcommand(
      "deduction", "Compare  context, phi |= psi  with  context |= phi -> psi");
  ded->add_option("phi", o.formula)->required();
  ded->add_option("psi", o.other)->required();
  ded->add_option("-c,--context", o.context, "Context formula (repeatable)");
  auto ded_format = add_format(*ded, {"text", "json"});
  add_output_option(*ded, session);
  ded->callback([&session, &action, opts, ded_format] {
    action = [&session, opts, ded_format] {
      const auto d = logic::deduction_check(parse_all(opts->context), logic::parse(opts->formula),
                                            logic::parse(opts->other));
      session.manifest().settings["format"] = *ded_format;
      if (*ded_format == "json") {
        ordered_json j;
        j["context"] = opts->context;
        j["phi"] = opts->formula;
        j["psi"] = opts->other;
        j["withPremise"] = d.with_premise.holds;
        j["withImplication"] = d.with_implication.holds;
        j["agree"] = d.agree;
        session.emit("deduction.json", j.dump(2) + "\n");
      } else {
        auto word = [](bool b) { return b ? "holds" : "fails"; };
        std::string text = std::string("with premise: ") + word(d.with_premise.holds) +
                           "\nwith implication: " + word(d.with_implication.holds) + "\n" +
                           (d.agree ? "agree" : "disagree") + "\n";
        session.emit("deduction.txt", text);
      }
      return d.agree ? kExitOk : kExitNegative;
    };
  });

  auto* suite = logic_cmd->add_subcommand("suite", "Check the reference tables and identities");
  auto suite_format = add_format(*suite, {"csv", "json"});
  add_output_option(*suite, session);
  suite->callback([&session, &action, opts, suite_format] {
    action = [&session, opts, suite_format] {
      const auto report = logic::identity_suite();
      session.manifest().settings["format"] = *suite_format;
      if (*suite_format == "csv") {
        session.emit("suite.csv", report.to_csv());
      } else {
        session.emit("suite.json", report.to_json() + "\n");
      }
      return report.all_passed() ? kExitOk : kExitNegative;
    };
  });
}

}  // namespace gammakit::cli
