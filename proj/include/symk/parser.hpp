#pragma once

#include <string>

#include "symk/rational_function.hpp"

namespace symk {

/// Parses the expression grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' uint)?
///   base   := ident | integer | '(' expr ')' | '-' base
/// into a canonical rational function over `field`. Identifiers resolve
/// through `registry` (registering new names unless the registry is closed).
/// Over an extension field the identifier "g" denotes the field generator.
/// Throws ParseError with a character position on bad syntax, and
/// DivisionByZeroError on division by an exact zero.
RationalFunction parse_expr(const std::string& text, Registry& registry,
                            const Field& field = Field::rationals());

}  // namespace symk
