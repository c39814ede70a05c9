#pragma once

// Text input for polynomials.
//
//   poly := ['+'|'-'] term (('+'|'-') term)*
//   term := coeff ['*'] ['x' ['^' exponent]] | 'x' ['^' exponent]
//
// Whitespace is ignored everywhere; duplicate exponents are summed.

#include <string_view>

#include "cyclofac/poly.hpp"

namespace cyclofac {

/// Throws ParseError (SyntaxError with a byte offset into `text`) and
/// ExponentOverflow for exponents above 2^32.
SparsePoly parse_poly(std::string_view text);

/// Comma-separated exponent:coefficient pairs, e.g. "6:1,2:1,0:2".
SparsePoly parse_terms(std::string_view text);

}  // namespace cyclofac
