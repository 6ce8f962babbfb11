#include "gammakit/logic/semantics.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>

#include "json.hpp"

namespace gammakit::logic {

bool evaluate(const Formula& f, const Assignment& a) {
  switch (f.connective()) {
    case Connective::kAtom: {
      auto it = a.find(f.name());
      if (it == a.end()) throw UnboundAtomError(f.name());
      return it->second;
    }
    case Connective::kNot:
      return !evaluate(f.child(), a);
    case Connective::kAnd:
      return evaluate(f.left(), a) && evaluate(f.right(), a);
    case Connective::kOr:
      return evaluate(f.left(), a) || evaluate(f.right(), a);
    case Connective::kImplies:
      return !evaluate(f.left(), a) || evaluate(f.right(), a);
    case Connective::kIff:
      return evaluate(f.left(), a) == evaluate(f.right(), a);
  }
  return false;
}

namespace {

// One bit per truth-table row, 64 rows per word.
using Bits = std::vector<std::uint64_t>;

class BitEvaluator {
 public:
  explicit BitEvaluator(const std::vector<std::string>& atoms) : atoms_(atoms) {
    if (atoms.size() > kMaxAtoms) throw TooManyAtomsError(atoms.size());
    rows_ = std::size_t{1} << atoms.size();
    words_ = (rows_ + 63) / 64;
    tail_ = rows_ % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (rows_ % 64)) - 1;

    const std::size_t k = atoms.size();
    for (std::size_t j = 0; j < k; ++j) {
      Bits column(words_, 0);
      const std::size_t shift = k - 1 - j;
      for (std::size_t r = 0; r < rows_; ++r) {
        if ((r >> shift) & 1U) column[r / 64] |= std::uint64_t{1} << (r % 64);
      }
      columns_.push_back(std::move(column));
    }
  }

  std::size_t rows() const { return rows_; }

  Bits run(const Formula& f) const {
    switch (f.connective()) {
      case Connective::kAtom: {
        auto it = std::lower_bound(atoms_.begin(), atoms_.end(), f.name());
        if (it == atoms_.end() || *it != f.name()) throw UnboundAtomError(f.name());
        return columns_[static_cast<std::size_t>(it - atoms_.begin())];
      }
      case Connective::kNot: {
        Bits x = run(f.child());
        for (auto& w : x) w = ~w;
        return masked(std::move(x));
      }
      default:
        break;
    }
    Bits l = run(f.left());
    const Bits r = run(f.right());
    for (std::size_t i = 0; i < words_; ++i) {
      switch (f.connective()) {
        case Connective::kAnd: l[i] &= r[i]; break;
        case Connective::kOr: l[i] |= r[i]; break;
        case Connective::kImplies: l[i] = ~l[i] | r[i]; break;
        case Connective::kIff: l[i] = ~(l[i] ^ r[i]); break;
        default: break;
      }
    }
    return masked(std::move(l));
  }

 private:
  Bits masked(Bits x) const {
    x.back() &= tail_;
    return x;
  }

  std::vector<std::string> atoms_;  // sorted
  std::vector<Bits> columns_;
  std::size_t rows_ = 1;
  std::size_t words_ = 1;
  std::uint64_t tail_ = 0;
};

bool bit(const Bits& b, std::size_t row) { return (b[row / 64] >> (row % 64)) & 1U; }

std::optional<std::size_t> first_row(const Bits& b, std::size_t rows, bool wanted) {
  for (std::size_t r = 0; r < rows; ++r) {
    if (bit(b, r) == wanted) return r;
  }
  return std::nullopt;
}

std::vector<std::string> union_atoms(const std::vector<Formula>& formulas) {
  std::set<std::string> names;
  for (const auto& f : formulas) {
    auto a = f.atoms();
    names.insert(a.begin(), a.end());
  }
  return {names.begin(), names.end()};
}

Formula verum(const std::vector<std::string>& atoms) {
  // A tautology over an existing atom keeps the atom set unchanged.
  const Formula p = Formula::atom(atoms.empty() ? "A" : atoms.front());
  return Formula::disjunction(Formula::negation(p), p);
}

}  // namespace

Assignment row_assignment(const std::vector<std::string>& atoms, std::size_t row) {
  Assignment a;
  const std::size_t k = atoms.size();
  for (std::size_t j = 0; j < k; ++j) a[atoms[j]] = (row >> (k - 1 - j)) & 1U;
  return a;
}

TruthTable::TruthTable(std::vector<std::string> atoms, std::vector<bool> values)
    : atoms_(std::move(atoms)), values_(std::move(values)) {}

Assignment TruthTable::assignment(std::size_t row) const {
  if (row >= values_.size()) throw std::out_of_range("truth table row out of range");
  return row_assignment(atoms_, row);
}

std::string TruthTable::to_csv() const {
  std::ostringstream out;
  for (const auto& a : atoms_) out << a << ',';
  out << "value\r\n";
  for (std::size_t r = 0; r < values_.size(); ++r) {
    const std::size_t k = atoms_.size();
    for (std::size_t j = 0; j < k; ++j) out << (((r >> (k - 1 - j)) & 1U) ? "T," : "F,");
    out << (values_[r] ? "T" : "F") << "\r\n";
  }
  return out.str();
}

std::string TruthTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["atoms"] = atoms_;
  doc["rows"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < values_.size(); ++r) {
    nlohmann::ordered_json assignment = nlohmann::ordered_json::object();
    for (const auto& [name, value] : row_assignment(atoms_, r)) assignment[name] = value;
    doc["rows"].push_back({{"assignment", assignment}, {"value", bool(values_[r])}});
  }
  return doc.dump(2);
}

TruthTable truth_table(const Formula& f) { return truth_table(f, f.atoms()); }

TruthTable truth_table(const Formula& f, const std::vector<std::string>& atoms) {
  std::vector<std::string> sorted = atoms;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate atom in truth table atom list");
  }
  if (sorted != atoms) {
    // Non-canonical column order: evaluate row by row.
    if (atoms.size() > kMaxAtoms) throw TooManyAtomsError(atoms.size());
    std::vector<bool> values(std::size_t{1} << atoms.size());
    for (std::size_t r = 0; r < values.size(); ++r) {
      values[r] = evaluate(f, row_assignment(atoms, r));
    }
    return TruthTable(atoms, std::move(values));
  }
  BitEvaluator eval(sorted);
  const Bits bits = eval.run(f);
  std::vector<bool> values(eval.rows());
  for (std::size_t r = 0; r < values.size(); ++r) values[r] = bit(bits, r);
  return TruthTable(sorted, std::move(values));
}

const char* to_string(Kind kind) {
  switch (kind) {
    case Kind::kTautology: return "tautology";
    case Kind::kContradiction: return "contradiction";
    case Kind::kContingent: return "contingent";
  }
  return "";
}

Classification classify(const Formula& f) {
  const auto atoms = f.atoms();
  BitEvaluator eval(atoms);
  const Bits bits = eval.run(f);
  Classification c{Kind::kContingent, std::nullopt, std::nullopt};
  if (auto r = first_row(bits, eval.rows(), false)) c.falsifying = row_assignment(atoms, *r);
  if (auto r = first_row(bits, eval.rows(), true)) c.satisfying = row_assignment(atoms, *r);
  if (!c.falsifying) c.kind = Kind::kTautology;
  if (!c.satisfying) c.kind = Kind::kContradiction;
  return c;
}

std::optional<Assignment> distinguishing_assignment(const Formula& f, const Formula& g) {
  const auto atoms = union_atoms({f, g});
  BitEvaluator eval(atoms);
  const Bits both = eval.run(Formula::biconditional(f, g));
  if (auto r = first_row(both, eval.rows(), false)) return row_assignment(atoms, *r);
  return std::nullopt;
}

bool are_equivalent(const Formula& f, const Formula& g) {
  return !distinguishing_assignment(f, g).has_value();
}

Entailment entails(const std::vector<Formula>& premises, const Formula& conclusion) {
  std::vector<Formula> all = premises;
  all.push_back(conclusion);
  const auto atoms = union_atoms(all);
  BitEvaluator eval(atoms);
  const Bits context = eval.run(conjoin(premises, verum(atoms)));
  const Bits goal = eval.run(conclusion);
  for (std::size_t r = 0; r < eval.rows(); ++r) {
    if (bit(context, r) && !bit(goal, r)) return {false, row_assignment(atoms, r)};
  }
  return {true, std::nullopt};
}

DeductionCheck deduction_check(const std::vector<Formula>& context, const Formula& phi,
                               const Formula& psi) {
  std::vector<Formula> extended = context;
  extended.push_back(phi);
  DeductionCheck check{entails(extended, psi), entails(context, Formula::implication(phi, psi)),
                       false};
  check.agree = check.with_premise.holds == check.with_implication.holds;
  return check;
}

Refutation refute(const Formula& phi) {
  const Classification c = classify(phi);
  if (c.kind == Kind::kContradiction) return {true, std::nullopt};
  return {false, c.satisfying};
}

std::string format_assignment(const Assignment& a) {
  std::string out;
  for (const auto& [name, value] : a) {
    if (!out.empty()) out += ',';
    out += name;
    out += value ? "=T" : "=F";
  }
  return out;
}

}  // namespace gammakit::logic
