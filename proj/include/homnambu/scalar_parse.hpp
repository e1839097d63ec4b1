#pragma once

#include <string_view>

#include "homnambu/scalar.hpp"

namespace homnambu {

/* Recursive-descent parser for scalar expressions.
 *
 * Grammar (usual precedence, '-' may be unary, '^' binds tightest):
 *   expr   := term (('+' | '-') term)*
 *   term   := unary (('*' | '/') unary)*
 *   unary  := '-' unary | power
 *   power  := atom ('^' integer)?
 *   atom   := integer | identifier | '(' expr ')'
 *
 * Identifiers must be declared in `params`; violations raise
 * UndeclaredParameter, other syntax problems raise ParseError with the
 * byte offset of the offending character. */
Scalar parse_scalar(std::string_view text, const ParamSetPtr& params);

}  // namespace homnambu
