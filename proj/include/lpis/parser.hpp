#ifndef LPIS_PARSER_HPP
#define LPIS_PARSER_HPP

#include "lpis/expr.hpp"

#include <string>
#include <string_view>

namespace lpis {

/// Parses the coefficient language:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := integer | identifier | '(' expr ')'
///
/// Rational literals are written as quotients ("1/2*t"). Identifiers must be
/// declared in `vars`. Throws ParseError (with a byte offset) on malformed
/// input, on unknown identifiers and on division by an expression that is
/// identically zero.
Expression parse_expr(std::string_view text, const VariablesPtr& vars);

} // namespace lpis

#endif
