#pragma once

#include <string_view>

#include "copoly/functional.hpp"
#include "copoly/rodrigues.hpp"

namespace copoly {

/// Parses a polynomial in x. Grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary | juxtaposed unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := integer | identifier | '(' expr ')'
///
/// Identifiers other than x are looked up in params and act as constants.
/// Division is only allowed by a nonzero constant, so "3/2" and
/// "(alpha+1)/2" are fine. Juxtaposition ("4x", "2(x+1)") multiplies.
/// Throws SyntaxError (with a 0-based position) or UnknownIdentifier.
RPoly parse_poly_expr(std::string_view text, const ParamMap& params = {});

}  // namespace copoly
