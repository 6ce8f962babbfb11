#pragma once

#include <string>
#include <vector>

namespace gammakit::logic {

/// One printed column of a reference truth table over atoms (A, B).
/// `printed` lists the expected values for rows FF, FT, TF, TT.
struct ReferenceColumn {
  int table;            // 1 or 2
  std::string label;    // as printed, e.g. "A <= B"
  std::string formula;  // parseable text
  std::vector<bool> printed;
  bool derived;         // false for the A/B input columns and plain literals
};

const std::vector<ReferenceColumn>& reference_columns();

struct SuiteItem {
  std::string name;
  bool passed;
  std::string detail;
};

struct SuiteReport {
  std::vector<SuiteItem> items;
  std::size_t cells_checked = 0;
  std::size_t derived_cells_checked = 0;

  bool all_passed() const;
  const SuiteItem* find(const std::string& name) const;
  std::string to_csv() const;
  std::string to_json() const;
};

/// Checks every reference column cell by cell, the four textbook
/// equivalences, the tautology/falsum examples, and the non-validity of
/// ~(A -> B) -> ~(A -> A) both as a formula and as an entailment.
SuiteReport identity_suite();

/// Printed value of one reference cell, addressed by column label and row
/// name ("FF", "FT", "TF" or "TT"). Throws std::out_of_range if unknown.
bool printed_cell(int table, const std::string& label, const std::string& row);

}  // namespace gammakit::logic
