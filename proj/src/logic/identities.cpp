#include "gammakit/logic/identities.hpp"

#include <sstream>
#include <stdexcept>

#include "gammakit/logic/parser.hpp"
#include "gammakit/logic/semantics.hpp"
#include "json.hpp"

namespace gammakit::logic {

namespace {

constexpr bool T = true;
constexpr bool F = false;

const char* const kRowNames[] = {"FF", "FT", "TF", "TT"};

std::string values_string(const std::vector<bool>& v) {
  std::string s;
  for (bool b : v) s += b ? 'T' : 'F';
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

const std::vector<ReferenceColumn>& reference_columns() {
  static const std::vector<ReferenceColumn> columns = {
      {1, "A", "A", {F, F, T, T}, false},
      {1, "B", "B", {F, T, F, T}, false},
      {1, "~B", "~B", {T, F, T, F}, true},
      {1, "A -> B", "A -> B", {T, T, F, T}, true},
      {1, "~(A -> B)", "~(A -> B)", {F, F, T, F}, true},
      {1, "A <- B", "A <- B", {T, F, T, T}, true},
      {1, "A <-> B", "A <-> B", {T, F, F, T}, true},
      {1, "A | ~B", "A | ~B", {T, F, T, T}, true},
      {1, "A & B", "A & B", {F, F, F, T}, true},
      {1, "A | B", "A | B", {F, T, T, T}, true},
      {2, "A", "A", {F, F, T, T}, false},
      {2, "B", "B", {F, T, F, T}, false},
      {2, "~A", "~A", {T, T, F, F}, false},
      {2, "~B", "~B", {T, F, T, F}, false},
      {2, "~A -> ~B", "~A -> ~B", {T, F, T, T}, true},
      {2, "A | ~B", "A | ~B", {T, F, T, T}, true},
      {2, "~A <- ~B", "~A <- ~B", {T, T, F, T}, true},
      {2, "~A | B", "~A | B", {T, T, F, T}, true},
      {2, "A & ~B", "A & ~B", {F, F, T, F}, true},
      {2, "~A <-> ~B", "~A <-> ~B", {T, F, F, T}, true},
  };
  return columns;
}

bool printed_cell(int table, const std::string& label, const std::string& row) {
  for (const auto& col : reference_columns()) {
    if (col.table != table || col.label != label) continue;
    for (std::size_t r = 0; r < 4; ++r) {
      if (row == kRowNames[r]) return col.printed[r];
    }
    throw std::out_of_range("unknown row '" + row + "'");
  }
  throw std::out_of_range("unknown column '" + label + "'");
}

bool SuiteReport::all_passed() const {
  for (const auto& item : items) {
    if (!item.passed) return false;
  }
  return true;
}

const SuiteItem* SuiteReport::find(const std::string& name) const {
  for (const auto& item : items) {
    if (item.name == name) return &item;
  }
  return nullptr;
}

std::string SuiteReport::to_csv() const {
  std::ostringstream out;
  out << "item,passed,detail\r\n";
  for (const auto& item : items) {
    out << csv_field(item.name) << ',' << (item.passed ? "true" : "false") << ','
        << csv_field(item.detail) << "\r\n";
  }
  return out.str();
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["allPassed"] = all_passed();
  doc["cellsChecked"] = cells_checked;
  doc["derivedCellsChecked"] = derived_cells_checked;
  doc["items"] = nlohmann::ordered_json::array();
  for (const auto& item : items) {
    doc["items"].push_back(
        {{"name", item.name}, {"passed", item.passed}, {"detail", item.detail}});
  }
  return doc.dump(2);
}

SuiteReport identity_suite() {
  SuiteReport report;
  const std::vector<std::string> ab = {"A", "B"};

  for (const auto& col : reference_columns()) {
    const TruthTable table = truth_table(parse(col.formula), ab);
    std::vector<bool> computed(table.values().begin(), table.values().end());
    const bool ok = computed == col.printed;
    report.cells_checked += col.printed.size();
    if (col.derived) report.derived_cells_checked += col.printed.size();
    report.items.push_back({"table " + std::to_string(col.table) + " column " + col.label, ok,
                            "printed " + values_string(col.printed) + ", computed " +
                                values_string(computed)});
  }

  const std::pair<const char*, const char*> equivalences[] = {
      {"~A <- ~B", "~A | B"},
      {"~A -> A", "A"},
      {"A & ~B -> A & ~A", "A -> B"},
      {"~A & B -> ~A & A", "B -> A"},
  };
  for (const auto& [lhs, rhs] : equivalences) {
    const auto diff = distinguishing_assignment(parse(lhs), parse(rhs));
    report.items.push_back({std::string("(") + lhs + ") == (" + rhs + ")", !diff.has_value(),
                            diff ? "differs at " + format_assignment(*diff) : "equivalent"});
  }

  const std::pair<const char*, Kind> classifications[] = {
      {"~A | A", Kind::kTautology},
      {"A & ~A", Kind::kContradiction},
  };
  for (const auto& [text, expected] : classifications) {
    const Kind got = classify(parse(text)).kind;
    report.items.push_back({std::string("classify ") + text + " as " + to_string(expected),
                            got == expected, std::string("computed ") + to_string(got)});
  }

  const Assignment witness = {{"A", true}, {"B", false}};
  {
    const Classification c = classify(parse("~(A -> B) -> ~(A -> A)"));
    const bool ok = c.kind == Kind::kContingent && c.falsifying == witness;
    report.items.push_back(
        {"classify ~(A -> B) -> ~(A -> A) as contingent", ok,
         std::string(to_string(c.kind)) +
             (c.falsifying ? ", falsified by " + format_assignment(*c.falsifying) : "")});
  }
  {
    const Entailment e = entails({parse("~(A -> B)")}, parse("~(A -> A)"));
    const bool ok = !e.holds && e.countermodel == witness;
    report.items.push_back(
        {"~(A -> B) does not entail ~(A -> A)", ok,
         e.holds ? "entailed" : "countermodel " + format_assignment(*e.countermodel)});
  }
  return report;
}

}  // namespace gammakit::logic
