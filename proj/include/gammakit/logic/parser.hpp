#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gammakit/logic/formula.hpp"

namespace gammakit::logic {

/// Raised on malformed formula text. `offset` is the byte offset of the
/// offending token; `expected` names what the grammar wanted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected, std::string found);

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t offset_;
  std::string expected_;
  std::string found_;
};

// Grammar, loosest binding first:
//
//   iff     := implies ( "<->" iff )?
//   implies := or ( "<-" or )* ( "->" implies )?
//   or      := and ( "|" and )*
//   and     := unary ( "&" unary )*
//   unary   := "~" unary | atom | "(" iff ")"
//   atom    := [A-Za-z][A-Za-z0-9_]*
//
// "x <- y" is converse implication and parses as Implies(y, x).
Formula parse(std::string_view text);

/// Text with the fewest parentheses that parses back to the same tree.
std::string render(const Formula& f);

}  // namespace gammakit::logic
