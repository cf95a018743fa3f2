// Recursive-descent parser for the expression grammar:
//
//   expr    := ['-'|'+'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := base ['^' integer]          (integer may be negative)
//   base    := rational | ident | '(' expr ')'
//   rational:= integer ['/' integer]
//   ident   := registered variable | i | m | r | rho
//
// Negative exponents are accepted only for Laurent variables, m, rho and r.
// parse(print(e)) == e on canonical forms with Laurent-monomial m parts.
#pragma once

#include "ncsym/expr.hpp"
#include <stdexcept>

namespace ncsym {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

Expr parse(const std::string& text, ContextPtr ctx);

} // namespace ncsym
