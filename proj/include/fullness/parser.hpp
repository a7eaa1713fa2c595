#pragma once

#include <string_view>

#include "fullness/polynomial.hpp"

namespace fullness {

/// Parses a polynomial over `ring`.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' unary) | ('/' INTEGER))*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' INTEGER)?
///   primary := INTEGER | IDENT | '(' expr ')'
///
/// Identifiers must be ring variables; juxtaposition is not multiplication.
/// Division is allowed only by a nonzero integer literal, so rational
/// coefficients print and re-parse as `3/2*x`.
///
/// Throws ParseError (with a 0-based byte position) or InputError.
Polynomial parse_polynomial(std::string_view src, const RingPtr& ring);

}  // namespace fullness
