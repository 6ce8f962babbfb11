#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammakit/logic/formula.hpp"

namespace gammakit::logic {

using Assignment = std::map<std::string, bool>;

/// Enumeration is capped at this many distinct atoms (2^16 rows).
inline constexpr std::size_t kMaxAtoms = 16;

class UnboundAtomError : public std::invalid_argument {
 public:
  explicit UnboundAtomError(const std::string& atom)
      : std::invalid_argument("atom '" + atom + "' is not bound by the assignment"),
        atom_(atom) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

class TooManyAtomsError : public std::invalid_argument {
 public:
  explicit TooManyAtomsError(std::size_t count)
      : std::invalid_argument("formula has " + std::to_string(count) +
                              " atoms; at most " + std::to_string(kMaxAtoms) +
                              " are supported") {}
};

bool evaluate(const Formula& f, const Assignment& a);

/// Rows follow binary counting with the first atom most significant and
/// false before true: for atoms (A, B) the order is FF, FT, TF, TT.
class TruthTable {
 public:
  TruthTable(std::vector<std::string> atoms, std::vector<bool> values);

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<bool>& values() const { return values_; }
  std::size_t row_count() const { return values_.size(); }
  Assignment assignment(std::size_t row) const;
  bool value(std::size_t row) const { return values_.at(row); }

  std::string to_csv() const;
  std::string to_json() const;

 private:
  std::vector<std::string> atoms_;
  std::vector<bool> values_;
};

Assignment row_assignment(const std::vector<std::string>& atoms, std::size_t row);

TruthTable truth_table(const Formula& f);
/// Truth table over an explicit atom list, which must cover the atoms of f.
TruthTable truth_table(const Formula& f, const std::vector<std::string>& atoms);

enum class Kind { kTautology, kContradiction, kContingent };

const char* to_string(Kind kind);

struct Classification {
  Kind kind;
  std::optional<Assignment> falsifying;  // first falsifying row, if any
  std::optional<Assignment> satisfying;  // first satisfying row, if any
};

Classification classify(const Formula& f);

bool are_equivalent(const Formula& f, const Formula& g);

/// First assignment (canonical order, union of atoms) where f and g differ.
std::optional<Assignment> distinguishing_assignment(const Formula& f, const Formula& g);

struct Entailment {
  bool holds;
  std::optional<Assignment> countermodel;
};

Entailment entails(const std::vector<Formula>& premises, const Formula& conclusion);

struct DeductionCheck {
  Entailment with_premise;      // context, phi |= psi
  Entailment with_implication;  // context |= phi -> psi
  bool agree;
};

DeductionCheck deduction_check(const std::vector<Formula>& context, const Formula& phi,
                               const Formula& psi);

struct Refutation {
  bool refuted;                     // phi is unsatisfiable
  std::optional<Assignment> model;  // first satisfying assignment otherwise
};

Refutation refute(const Formula& phi);

/// "A=T,B=F" in atom order.
std::string format_assignment(const Assignment& a);

}  // namespace gammakit::logic
