#pragma once

#include "kitt/polynomial.hpp"

#include <string_view>

namespace kitt {

/// Parses a polynomial over `ring`.
///
/// Grammar: sums and differences of products of factors; a factor is an
/// integer, a rational literal `p/q` written between two integer literals,
/// a ring variable, or a parenthesised expression, optionally raised to a
/// non-negative integer power with `^`. Multiplication must be explicit.
/// Any other use of `/` is rejected as division.
///
/// Throws ParseError carrying the 1-based line and column of the offending
/// character.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace kitt
