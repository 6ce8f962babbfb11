// One line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gammakit/cli/csv.hpp"
#include "gammakit/cli/run.hpp"
#include "gammakit/equilibrium/core.hpp"
#include "gammakit/equilibrium/foc.hpp"
#include "gammakit/equilibrium/gamma.hpp"
#include "gammakit/equilibrium/json.hpp"
#include "gammakit/equilibrium/solver.hpp"
#include "gammakit/logic/identities.hpp"
#include "gammakit/logic/parser.hpp"
#include "gammakit/logic/semantics.hpp"
#include "gammakit/oligopoly/cost.hpp"
#include "gammakit/oligopoly/curves.hpp"
#include "gammakit/oligopoly/market.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
namespace eq = gammakit::equilibrium;
namespace lg = gammakit::logic;
namespace ol = gammakit::oligopoly;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) detail << "failed: " << what << "; ";
    ok = ok && condition;
  }
};

using Criterion = std::function<void(Check&)>;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string data(const std::string& name) { return std::string(GAMMAKIT_TEST_DATA) + "/" + name; }

// ---- logic ----

void truth_table_lock(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto report = lg::identity_suite();
  const double elapsed = seconds_since(t0);
  std::size_t columns = 0, failed = 0;
  for (const auto& item : report.items) {
    if (!item.name.starts_with("table ")) continue;
    ++columns;
    if (!item.passed) ++failed;
  }
  c.require(failed == 0, std::to_string(failed) + " table columns differ");
  c.require(report.derived_cells_checked == 56,
            "derived cells " + std::to_string(report.derived_cells_checked));
  c.require(elapsed < 1.0, "runtime");
  c.detail << columns << " columns, " << report.derived_cells_checked << " derived cells";
}

void identity_lock(Check& c) {
  const std::pair<const char*, const char*> pairs[] = {
      {"~A <- ~B", "~A | B"},
      {"~A -> A", "A"},
      {"A & ~B -> A & ~A", "A -> B"},
      {"~A & B -> ~A & A", "B -> A"},
  };
  for (const auto& [l, r] : pairs) {
    c.require(lg::are_equivalent(lg::parse(l), lg::parse(r)), std::string(l) + " == " + r);
  }
  const lg::Assignment witness = {{"A", true}, {"B", false}};
  const auto cls = lg::classify(lg::parse("~(A -> B) -> ~(A -> A)"));
  c.require(cls.kind == lg::Kind::kContingent, "classification");
  c.require(cls.falsifying == witness, "witness");
  const auto e = lg::entails({lg::parse("~(A -> B)")}, lg::parse("~(A -> A)"));
  c.require(!e.holds, "entailment");
  c.require(e.countermodel == witness, "countermodel");
  c.detail << "4 equivalences, contingent with A=T,B=F, not entailed";
}

bool brute_entails(const std::vector<lg::Formula>& premises, const lg::Formula& goal) {
  for (int r = 0; r < 4; ++r) {
    const lg::Assignment a = {{"A", (r & 2) != 0}, {"B", (r & 1) != 0}};
    bool all = true;
    for (const auto& p : premises) all = all && lg::evaluate(p, a);
    if (all && !lg::evaluate(goal, a)) return false;
  }
  return true;
}

void deduction_suite(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto formulas = lg::enumerate_formulas({"A", "B"}, 2);
  std::vector<std::vector<lg::Formula>> contexts{{}};
  for (const auto& f : formulas) contexts.push_back({f});
  std::size_t checks = 0, disagreements = 0;
  for (const auto& ctx : contexts) {
    for (const auto& phi : formulas) {
      for (const auto& psi : formulas) {
        const auto d = lg::deduction_check(ctx, phi, psi);
        auto with = ctx;
        with.push_back(phi);
        const bool expected = brute_entails(with, psi);
        if (!d.agree || d.with_premise.holds != expected ||
            d.with_implication.holds != expected) {
          ++disagreements;
        }
        ++checks;
      }
    }
  }
  const double elapsed = seconds_since(t0);
  c.require(formulas.size() == 20, "20 formulas of depth <= 2");
  c.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  c.require(elapsed < 10.0, "runtime");
  c.detail << checks << " triples over " << formulas.size() << " formulas and "
           << contexts.size() << " contexts";
}

// ---- market ----

// Least cost of producing y with the members' linear costs and capacities:
// an optimal vertex has every member at 0 or capacity except at most one.
double vertex_min_cost(const ol::OligopolySituation& s, const std::vector<std::size_t>& members,
                       double y) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t k = members.size();
  for (std::size_t free = 0; free < k; ++free) {
    for (std::uint32_t full = 0; full < (1u << k); ++full) {
      if (full >> free & 1) continue;
      double used = 0.0, cost = 0.0;
      for (std::size_t j = 0; j < k; ++j) {
        if (full >> j & 1) {
          used += s.capacity(members[j]);
          cost += s.cost(members[j]) * s.capacity(members[j]);
        }
      }
      const double rest = y - used;
      if (rest < -1e-12 || rest > s.capacity(members[free]) + 1e-12) continue;
      best = std::min(best, cost + s.cost(members[free]) * std::max(0.0, rest));
    }
  }
  return best;
}

void aggregate_cost_check(Check& c) {
  const auto s = ol::reference_situation();
  const auto cost = ol::aggregate_cost(s, ol::Coalition::parse("1,2,3", 5));
  c.require(cost.breakpoints() == std::vector<double>{0.0, 2.4, 2.55, 4.55}, "breakpoints");
  c.require(cost.slopes() == std::vector<double>{0.125, 2.5, 5.0}, "slopes");
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double y = 4.55 * k / 99.0;
    worst = std::max(worst, std::abs(cost.evaluate(y) - vertex_min_cost(s, {0, 1, 2}, y)));
  }
  c.require(worst <= 1e-6, "evaluation");
  c.detail << "breakpoints 2.4, 2.55, 4.55; slopes 1/8, 5/2, 5; max error " << worst;
}

void best_response_check(Check& c) {
  const auto s = ol::reference_situation();
  double worst = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    for (int k = 0; k <= 20; ++k) {
      const double z = 0.5 * k;
      const double root = (-2.0 * z + std::sqrt(z * z + 3.0 * (s.a() - s.cost(i)))) / 3.0;
      const double expected = std::clamp(root, 0.0, s.capacity(i));
      const double got = ol::best_response(s, ol::Coalition::singleton(i, 5), z).output;
      worst = std::max(worst, std::abs(got - expected));
    }
  }
  c.require(worst <= 1e-6, "best reply");
  c.detail << "105 cases, max error " << worst;
}

void curve_check(Check& c) {
  const double kernel_c = 5735.0 / 6.0;
  auto root = [&](double x) { return std::sqrt(x * x + kernel_c); };
  auto rounded = [](double x) { return std::sqrt(x * x + 955.833); };
  auto trust = [&](double k, double x) { return (k - 10 * x * x - 10 * x * root(x)) / 16; };
  auto o4 = [&](double x) { return 3.0 / 5735 * (1927.0 / 8 * rounded(x) - 89849.0 / 125 * x); };
  auto o5 = [&](double x) { return 3.0 / 5735 * (28208.0 / 119 * rounded(x) - 85080.0 / 119 * x); };

  using ol::ReferenceCurve;
  struct Point {
    double x;
    int regime;
    double constant;
  };
  const Point points[] = {{0, 0, 5773.0 / 6}, {1, 0, 5773.0 / 6},    {2.4, 0, 5773.0 / 6},
                          {2.4, 1, 5545.0 / 6}, {2.55, 1, 5545.0 / 6}, {2.55, 2, 5305.0 / 6},
                          {4, 2, 5305.0 / 6}};
  double worst = 0.0;
  for (const auto& p : points) {
    worst = std::max(worst, std::abs(ol::reference_curve_regime(ReferenceCurve::kTrust123,
                                                                p.regime, p.x) -
                                     trust(p.constant, p.x)));
    worst = std::max(worst, std::abs(ol::reference_curve(ReferenceCurve::kOutsider4, p.x).value -
                                     o4(p.x)));
    worst = std::max(worst, std::abs(ol::reference_curve(ReferenceCurve::kOutsider5, p.x).value -
                                     o5(p.x)));
  }
  // The left limits at the boundaries are the sampled values themselves.
  for (double b : {2.4, 2.55}) {
    c.require(ol::reference_curve(ReferenceCurve::kTrust123, b).regime ==
                  (b == 2.4 ? 0 : 1),
              "left-closed regimes");
  }
  c.require(worst <= 1e-9, "values");

  const auto jumps =
      ol::discontinuity_scan(ol::sample_reference_curve(ReferenceCurve::kTrust123), 1e-6);
  c.require(jumps.size() == 2, std::to_string(jumps.size()) + " jumps");
  if (jumps.size() == 2) {
    c.require(std::abs(jumps[0].location - 2.4) <= 1e-9 && std::abs(jumps[0].size - 2.375) <= 1e-9,
              "jump at 2.4");
    c.require(std::abs(jumps[1].location - 2.55) <= 1e-9 && std::abs(jumps[1].size - 2.5) <= 1e-9,
              "jump at 2.55");
  }
  for (auto other : {ReferenceCurve::kOutsider4, ReferenceCurve::kOutsider5}) {
    c.require(ol::discontinuity_scan(ol::sample_reference_curve(other), 1e-6).empty(),
              "smooth outsider curve");
  }
  c.detail << "max error " << worst << "; jumps";
  for (const auto& j : jumps) c.detail << " " << j.location << " (" << j.size << ")";
}

// ---- equilibrium ----

std::vector<double> fixed_point_oracle(const ol::OligopolySituation& s) {
  auto outputs = [&](double x) {
    std::vector<double> out;
    for (std::size_t i = 0; i < s.firm_count(); ++i) {
      out.push_back(std::clamp((s.a() - s.cost(i) - s.b() * x * x) / (2 * s.b() * x), 0.0,
                               s.capacity(i)));
    }
    return out;
  };
  double lo = 1e-9, hi = 0.0;
  for (double w : s.capacities()) hi += w;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    double sum = 0.0;
    for (double v : outputs(mid)) sum += v;
    (sum > mid ? lo : hi) = mid;
  }
  return outputs(0.5 * (lo + hi));
}

void singleton_equilibrium(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto s = ol::reference_situation();
  const auto r = eq::partial_agreement_equilibrium(s, ol::Partition::singletons(5));
  const double elapsed = seconds_since(t0);
  c.require(r.status == eq::Status::kFound, "status");
  c.require(r.epsilon <= 1e-6, "epsilon");
  const auto expected = fixed_point_oracle(s);
  double worst = 0.0;
  for (std::size_t i = 0; i < 5 && r.profile.size() == 5; ++i) {
    worst = std::max(worst, std::abs(r.profile[i] - expected[i]));
  }
  c.require(worst <= 1e-5, "oracle distance");
  c.require(elapsed < 5.0, "runtime");
  c.detail << "epsilon " << r.epsilon << ", max deviation " << worst << ", " << r.iterations
           << " iterations";
}

struct PartitionCase {
  const char* config;
  const char* key;
  bool published_existence;
};

nlohmann::json solve_via_cli(const PartitionCase& pc, Check& c) {
  const fs::path dir = fs::path(GAMMAKIT_SCRATCH_DIR) / pc.key;
  fs::remove_all(dir);
  std::ostringstream out, err;
  const int code = gammakit::cli::run({"olig", "solve", "--config", data(pc.config), "--partition",
                                       "1,2,3|4|5", "--step", "0.05", "-o", dir.string()},
                                      out, err);
  c.require(code == gammakit::cli::kExitOk || code == gammakit::cli::kExitNegative,
            "exit code " + std::to_string(code) + " " + err.str());
  if (!fs::exists(dir / "equilibrium.json")) return {};
  return nlohmann::json::parse(gammakit::cli::read_file(dir / "equilibrium.json"));
}

void partition_outcome(Check& c) {
  const PartitionCase cases[] = {{"paper.json", "reference", false},
                                 {"paper_w1_10.json", "capacity10", true}};
  const fs::path baseline_path = data("baseline_partition.json");
  const bool update = std::getenv("GAMMAKIT_UPDATE_BASELINE") != nullptr;
  nlohmann::json baseline = fs::exists(baseline_path)
                                ? nlohmann::json::parse(gammakit::cli::read_file(baseline_path))
                                : nlohmann::json::object();
  const auto p = ol::Partition::parse("1,2,3|4|5", 5);

  for (const auto& pc : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto doc = solve_via_cli(pc, c);
    const double elapsed = seconds_since(t0);
    c.require(elapsed < 300.0, std::string(pc.key) + " runtime");
    if (doc.is_null()) {
      c.require(false, std::string(pc.key) + " produced no result");
      continue;
    }
    const bool found = doc["status"] == "found";
    const double value = found ? doc["epsilon"].get<double>() : doc["deltaStar"].get<double>();
    c.require(found ? value <= 1e-6 : value > 1e-6, std::string(pc.key) + " certificate");

    const auto s = ol::load_situation_file(data(pc.config));
    const double step = 0.05;
    const double bound = eq::payoff_lipschitz_bound(s) * step;
    double refined;
    if (found) {
      refined = eq::certify(s, p, doc["profile"].get<std::vector<double>>(), step / 2).epsilon;
    } else {
      refined = eq::exhaustive_scan(s, p, step / 2).delta_star;
    }
    c.require(std::abs(refined - value) < bound, std::string(pc.key) + " half-step recertification");

    nlohmann::json record = {{"status", doc["status"]},
                             {"profile", doc["profile"]},
                             {found ? "epsilon" : "deltaStar", value}};
    if (update || !baseline.contains(pc.key)) {
      baseline[pc.key] = record;
    } else {
      const auto& b = baseline[pc.key];
      c.require(b["status"] == record["status"], std::string(pc.key) + " baseline status");
      const auto bp = b["profile"].get<std::vector<double>>();
      const auto rp = record["profile"].get<std::vector<double>>();
      bool close = bp.size() == rp.size();
      for (std::size_t i = 0; close && i < bp.size(); ++i) close = std::abs(bp[i] - rp[i]) <= 1e-6;
      c.require(close, std::string(pc.key) + " baseline profile");
    }

    c.detail << pc.key << ": " << doc["status"].get<std::string>() << " ("
             << (found ? "epsilon " : "delta* ") << value << ", half step " << refined
             << ", L*h " << bound << ", " << std::fixed << std::setprecision(2) << elapsed
             << std::defaultfloat << std::setprecision(6) << " s); published "
             << (pc.published_existence ? "existence" : "non-existence") << " "
             << (found == pc.published_existence ? "reproduced" : "NOT reproduced") << ". ";
  }
  if (update || !fs::exists(baseline_path)) {
    gammakit::cli::write_file_atomic(baseline_path, baseline.dump(2) + "\n");
  }
}

void gamma_check(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto s = ol::reference_situation();
  const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  const auto first = eq::gamma_characteristic(s, {}, jobs);
  const auto second = eq::gamma_characteristic(s, {}, 1);
  const double elapsed = seconds_since(t0);
  c.require(first.entries().size() == 31, "31 entries");
  c.require(eq::to_json(first).dump() == eq::to_json(second).dump(), "bit-identical runs");
  std::size_t certified = 0;
  for (const auto& e : first.entries()) {
    const auto& r = e.provenance;
    if (e.value) {
      const bool valid = r.status == eq::Status::kFound && r.certificate.passed &&
                         r.certificate.epsilon <= r.settings.tolerance;
      c.require(valid, "certificate of " + e.coalition.to_string());
      ++certified;
    } else {
      c.require(r.status == eq::Status::kNotFound && r.scan.has_value(),
                "VOID report of " + e.coalition.to_string());
    }
  }
  c.require(elapsed < 1800.0, "runtime");
  c.detail << certified << " certified, " << first.void_count() << " VOID, two runs in "
           << elapsed << " s; v(N) = " << *first.at(ol::Coalition::grand(5)).value;
}

void foc_check(Check& c) {
  const auto s = ol::reference_situation();
  const auto r = eq::partial_agreement_equilibrium(s, ol::Partition::singletons(5));
  const auto d = eq::foc_diagnostics(s, ol::Partition::singletons(5), r.profile);
  double worst = 0.0;
  std::size_t interior = 0;
  for (std::size_t i = 0; i < d.residuals.size(); ++i) {
    if (d.one_sided[i]) continue;
    ++interior;
    worst = std::max(worst, std::abs(d.residuals[i]));
  }
  c.require(worst <= 1e-3, "residuals");
  const auto trust = ol::Coalition::parse("1,2,3", 5);
  std::size_t max_rank = 0;
  for (const auto& x : {ol::StrategyProfile{1.0, 0.1, 1.0, 2.0, 2.0},
                        ol::StrategyProfile{2.0, 0.05, 0.5, 3.0, 1.0},
                        ol::StrategyProfile{0.3, 0.12, 1.7, 2.5, 2.2}}) {
    max_rank = std::max(max_rank, eq::memberwise_foc_diagnostics(s, trust, x).rank);
  }
  c.require(max_rank < 3, "member-wise rank");
  c.detail << interior << " interior firms, max |residual| " << worst << "; member-wise rank "
           << max_rank;
}

bool in_core(const eq::TuGame& g, const std::vector<double>& u) {
  const std::uint64_t full = (1u << g.n) - 1;
  for (std::uint64_t m = 1; m <= full; ++m) {
    double sum = 0.0;
    for (std::size_t i = 0; i < g.n; ++i) {
      if (m >> i & 1) sum += u[i];
    }
    if (sum < g.at(m) - 1e-9) return false;
    if (m == full && std::abs(sum - g.at(m)) > 1e-9) return false;
  }
  return true;
}

bool grid_core(const eq::TuGame& g, double h) {
  const double v = g.at(7);
  const int n = static_cast<int>(std::lround(v / h));
  for (int i = -n; i <= 2 * n; ++i) {
    for (int j = -n; j <= 2 * n; ++j) {
      if (in_core(g, {i * h, j * h, v - (i + j) * h})) return true;
    }
  }
  return false;
}

void core_check(Check& c) {
  auto three = [](double single, double pair, double grand) {
    eq::TuGame g(3);
    for (std::uint64_t m : {1u, 2u, 4u}) g.set(m, single);
    for (std::uint64_t m : {3u, 5u, 6u}) g.set(m, pair);
    g.set(7, grand);
    return g;
  };
  const auto yes = eq::core_nonempty(three(0, 0, 1));
  c.require(yes.nonempty && in_core(three(0, 0, 1), yes.imputation), "nonempty example");
  c.require(!eq::core_nonempty(three(0, 1, 1)).nonempty, "empty example");

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> units(0, 20);
  int agree = 0, nonempty = 0;
  const int trials = 500;
  for (int t = 0; t < trials; ++t) {
    eq::TuGame g(3);
    for (std::uint64_t m : {3u, 5u, 6u}) g.set(m, 0.05 * units(rng));
    for (std::uint64_t m : {1u, 2u, 4u}) g.set(m, 0.05 * (units(rng) / 4));
    g.set(7, 0.05 * (units(rng) + 10));
    const auto r = eq::core_nonempty(g);
    if (r.nonempty == grid_core(g, 0.05) && (!r.nonempty || in_core(g, r.imputation))) ++agree;
    nonempty += r.nonempty;
  }
  c.require(agree == trials, std::to_string(trials - agree) + " disagreements");
  c.detail << "hand examples decided; " << agree << "/" << trials << " random games agree ("
           << nonempty << " nonempty)";
}

}  // namespace

int main() {
  const std::pair<const char*, Criterion> criteria[] = {
      {"truth-table lock", truth_table_lock},
      {"identity lock", identity_lock},
      {"deduction-theorem suite", deduction_suite},
      {"aggregate cost", aggregate_cost_check},
      {"best-response oracle", best_response_check},
      {"reference curves", curve_check},
      {"singleton equilibrium", singleton_equilibrium},
      {"trust partition outcome", partition_outcome},
      {"gamma characteristic function", gamma_check},
      {"FOC diagnostics", foc_check},
      {"core LP", core_check},
  };
  fs::create_directories(GAMMAKIT_SCRATCH_DIR);
  int failures = 0;
  int number = 0;
  for (const auto& [name, run] : criteria) {
    ++number;
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(t0);
    failures += !check.ok;
    std::cout << (check.ok ? "PASS" : "FAIL") << "  " << std::setw(2) << number << "  " << name
              << "  [" << std::fixed << std::setprecision(3) << elapsed << " s]  "
              << std::defaultfloat << check.detail.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
