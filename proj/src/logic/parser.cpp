#include "gammakit/logic/parser.hpp"

#include <cctype>
#include <vector>

namespace gammakit::logic {

ParseError::ParseError(std::size_t offset, std::string expected, std::string found)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                         ": expected " + expected + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok { kIdent, kNot, kAnd, kOr, kImplies, kConverse, kIff, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::kEnd) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::kIdent, i, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    auto starts = [&](std::string_view op) { return s.substr(i, op.size()) == op; };
    if (starts("<->")) {
      out.push_back({Tok::kIff, i, "<->"});
      i += 3;
    } else if (starts("<-")) {
      out.push_back({Tok::kConverse, i, "<-"});
      i += 2;
    } else if (starts("->")) {
      out.push_back({Tok::kImplies, i, "->"});
      i += 2;
    } else if (c == '~') {
      out.push_back({Tok::kNot, i++, "~"});
    } else if (c == '&') {
      out.push_back({Tok::kAnd, i++, "&"});
    } else if (c == '|') {
      out.push_back({Tok::kOr, i++, "|"});
    } else if (c == '(') {
      out.push_back({Tok::kLParen, i++, "("});
    } else if (c == ')') {
      out.push_back({Tok::kRParen, i++, ")"});
    } else {
      throw ParseError(i, "atom, operator or parenthesis",
                       "'" + std::string(1, c) + "'");
    }
  }
  out.push_back({Tok::kEnd, s.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse_all() {
    Formula f = parse_iff();
    if (peek().kind != Tok::kEnd) {
      throw ParseError(peek().offset, "binary operator or end of input", describe(peek()));
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (accept(Tok::kIff)) return Formula::biconditional(lhs, parse_iff());
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    while (accept(Tok::kConverse)) {
      lhs = Formula::implication(parse_or(), lhs);
    }
    if (accept(Tok::kImplies)) return Formula::implication(lhs, parse_implies());
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (accept(Tok::kOr)) lhs = Formula::disjunction(lhs, parse_and());
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (accept(Tok::kAnd)) lhs = Formula::conjunction(lhs, parse_unary());
    return lhs;
  }

  Formula parse_unary() {
    if (accept(Tok::kNot)) return Formula::negation(parse_unary());
    const Token& t = peek();
    if (t.kind == Tok::kIdent) {
      advance();
      return Formula::atom(t.text);
    }
    if (t.kind == Tok::kLParen) {
      advance();
      Formula inner = parse_iff();
      if (!accept(Tok::kRParen)) {
        throw ParseError(peek().offset, "')'", describe(peek()));
      }
      return inner;
    }
    throw ParseError(t.offset, "atom, '~' or '('", describe(t));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

int precedence(Connective op) {
  switch (op) {
    case Connective::kIff: return 1;
    case Connective::kImplies: return 2;
    case Connective::kOr: return 3;
    case Connective::kAnd: return 4;
    case Connective::kNot: return 5;
    case Connective::kAtom: return 6;
  }
  return 0;
}

const char* symbol(Connective op) {
  switch (op) {
    case Connective::kAnd: return " & ";
    case Connective::kOr: return " | ";
    case Connective::kImplies: return " -> ";
    case Connective::kIff: return " <-> ";
    default: return "";
  }
}

bool right_associative(Connective op) {
  return op == Connective::kImplies || op == Connective::kIff;
}

void render_into(const Formula& f, std::string& out);

void render_operand(const Formula& f, bool parenthesize, std::string& out) {
  if (parenthesize) out += '(';
  render_into(f, out);
  if (parenthesize) out += ')';
}

void render_into(const Formula& f, std::string& out) {
  const Connective op = f.connective();
  if (op == Connective::kAtom) {
    out += f.name();
    return;
  }
  const int prec = precedence(op);
  if (op == Connective::kNot) {
    out += '~';
    render_operand(f.child(), precedence(f.child().connective()) < prec, out);
    return;
  }
  const int lp = precedence(f.left().connective());
  const int rp = precedence(f.right().connective());
  const bool right_assoc = right_associative(op);
  render_operand(f.left(), right_assoc ? lp <= prec : lp < prec, out);
  out += symbol(op);
  render_operand(f.right(), right_assoc ? rp < prec : rp <= prec, out);
}

}  // namespace

Formula parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

}  // namespace gammakit::logic
