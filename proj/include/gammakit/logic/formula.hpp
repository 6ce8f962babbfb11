#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace gammakit::logic {

enum class Connective {
  kAtom,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
};

/// Immutable propositional formula over named atoms.
///
/// Formulas are cheap to copy: subtrees are shared and never mutated after
/// construction, so a Formula can be handed to several threads at once.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula negation(Formula child);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula implication(Formula antecedent, Formula consequent);
  static Formula biconditional(Formula left, Formula right);
  static Formula binary(Connective op, Formula left, Formula right);

  Connective connective() const;
  bool is_atom() const;
  bool is_binary() const;

  // Valid only for atoms.
  const std::string& name() const;
  // Valid only for negations.
  const Formula& child() const;
  // Valid only for binary connectives.
  const Formula& left() const;
  const Formula& right() const;

  /// Height of the syntax tree; a bare atom has depth 1.
  std::size_t depth() const;
  std::size_t size() const;

  /// Distinct atom names in lexicographic order.
  std::vector<std::string> atoms() const;

  friend bool operator==(const Formula& lhs, const Formula& rhs);
  friend bool operator!=(const Formula& lhs, const Formula& rhs) {
    return !(lhs == rhs);
  }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Connective op = Connective::kAtom;
  std::string name;
  std::vector<Formula> children;
};

bool is_valid_atom_name(const std::string& name);

/// Conjunction of all formulas, or the given tautology when the list is empty.
Formula conjoin(const std::vector<Formula>& formulas, const Formula& empty);

/// All formulas over `atoms` with depth at most `max_depth`, built from
/// ~, &, |, -> and <->. Order is deterministic: by depth, then connective,
/// then children in enumeration order.
std::vector<Formula> enumerate_formulas(const std::vector<std::string>& atoms,
                                        std::size_t max_depth);

}  // namespace gammakit::logic
