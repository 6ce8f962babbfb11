#include "gammakit/logic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace gammakit::logic {

Connective Formula::connective() const { return node_->op; }

bool Formula::is_atom() const { return node_->op == Connective::kAtom; }

bool is_valid_atom_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) {
    throw std::invalid_argument("invalid atom name '" + name + "'");
  }
  auto node = std::make_shared<Node>();
  node->op = Connective::kAtom;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::negation(Formula child) {
  auto node = std::make_shared<Node>();
  node->op = Connective::kNot;
  node->children.push_back(std::move(child));
  return Formula(std::move(node));
}

Formula Formula::binary(Connective op, Formula left, Formula right) {
  if (op == Connective::kAtom || op == Connective::kNot) {
    throw std::invalid_argument("connective is not binary");
  }
  auto node = std::make_shared<Node>();
  node->op = op;
  node->children.push_back(std::move(left));
  node->children.push_back(std::move(right));
  return Formula(std::move(node));
}

Formula Formula::conjunction(Formula left, Formula right) {
  return binary(Connective::kAnd, std::move(left), std::move(right));
}

Formula Formula::disjunction(Formula left, Formula right) {
  return binary(Connective::kOr, std::move(left), std::move(right));
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
  return binary(Connective::kImplies, std::move(antecedent), std::move(consequent));
}

Formula Formula::biconditional(Formula left, Formula right) {
  return binary(Connective::kIff, std::move(left), std::move(right));
}

bool Formula::is_binary() const {
  return node_->op != Connective::kAtom && node_->op != Connective::kNot;
}

const std::string& Formula::name() const {
  if (!is_atom()) throw std::logic_error("formula is not an atom");
  return node_->name;
}

const Formula& Formula::child() const {
  if (node_->op != Connective::kNot) throw std::logic_error("formula is not a negation");
  return node_->children[0];
}

const Formula& Formula::left() const {
  if (!is_binary()) throw std::logic_error("formula is not binary");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (!is_binary()) throw std::logic_error("formula is not binary");
  return node_->children[1];
}

std::size_t Formula::depth() const {
  std::size_t deepest = 0;
  for (const auto& c : node_->children) deepest = std::max(deepest, c.depth());
  return deepest + 1;
}

std::size_t Formula::size() const {
  std::size_t total = 1;
  for (const auto& c : node_->children) total += c.size();
  return total;
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.connective()) {
    case Connective::kAtom:
      out.insert(f.name());
      return;
    case Connective::kNot:
      collect_atoms(f.child(), out);
      return;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
  }
}

}  // namespace

std::vector<std::string> Formula::atoms() const {
  std::set<std::string> names;
  collect_atoms(*this, names);
  return {names.begin(), names.end()};
}

bool operator==(const Formula& lhs, const Formula& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  if (lhs.node_->op != rhs.node_->op) return false;
  if (lhs.is_atom()) return lhs.node_->name == rhs.node_->name;
  return lhs.node_->children == rhs.node_->children;
}

Formula conjoin(const std::vector<Formula>& formulas, const Formula& empty) {
  if (formulas.empty()) return empty;
  Formula result = formulas.front();
  for (std::size_t i = 1; i < formulas.size(); ++i) {
    result = Formula::conjunction(result, formulas[i]);
  }
  return result;
}

std::vector<Formula> enumerate_formulas(const std::vector<std::string>& atoms,
                                        std::size_t max_depth) {
  if (max_depth == 0) return {};
  // levels[d] holds formulas of depth exactly d + 1.
  std::vector<std::vector<Formula>> levels(1);
  for (const auto& a : atoms) levels[0].push_back(Formula::atom(a));

  constexpr Connective kBinary[] = {Connective::kAnd, Connective::kOr,
                                    Connective::kImplies, Connective::kIff};
  for (std::size_t d = 1; d < max_depth; ++d) {
    std::vector<Formula> shallower;
    for (std::size_t k = 0; k + 1 < d; ++k) {
      shallower.insert(shallower.end(), levels[k].begin(), levels[k].end());
    }
    const auto& top = levels[d - 1];
    std::vector<Formula> next;
    for (const auto& f : top) next.push_back(Formula::negation(f));
    for (Connective op : kBinary) {
      // At least one child must sit at the previous level.
      for (const auto& l : top) {
        for (const auto& r : shallower) next.push_back(Formula::binary(op, l, r));
        for (const auto& r : top) next.push_back(Formula::binary(op, l, r));
      }
      for (const auto& l : shallower) {
        for (const auto& r : top) next.push_back(Formula::binary(op, l, r));
      }
    }
    levels.push_back(std::move(next));
  }

  std::vector<Formula> all;
  for (auto& level : levels) all.insert(all.end(), level.begin(), level.end());
  return all;
}

}  // namespace gammakit::logic
