#pragma once

#include <set>
#include <string>
#include <string_view>

#include "crg/scalar/unit_fraction.hpp"

namespace crg {

// Side declarations for identifiers; anything undeclared is a complex free symbol.
struct ParseOptions {
  std::set<std::string> units;       // complex, invertible
  std::set<std::string> reals;       // real, not invertible
  std::set<std::string> real_units;  // real and invertible
  // Accept X(expr) for registered frame derivations X.
  bool derivations = false;

  SymbolKind kind_of(const std::string& name) const;
  Symbol symbol(const std::string& name) const { return Symbol::make(name, kind_of(name)); }
};

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | primary ('^' ['-'] integer)?
//   primary:= identifier | 'conj' '(' expr ')' | 'I' | integer | '(' expr ')'
//            | derivation '(' expr ')'
// Identifiers may carry trailing apostrophes (z', w'). Throws SyntaxError with a
// 1-based column, or NotAUnit for a division by a non-unit.
UnitFraction parse_expr(std::string_view text, const ParseOptions& opts = {});

}  // namespace crg
