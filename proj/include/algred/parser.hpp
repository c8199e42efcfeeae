#pragma once

#include <string>

#include "algred/poly.hpp"

namespace algred {

/// Parse an expression over the given variables into its canonical Poly.
///
/// Grammar (ASCII, whitespace insignificant):
///   expr   := term (('+'|'-') term)*
///   term   := unary (('*'|'/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' integer)?
///   atom   := integer | 'i' | 'hbar' | identifier | '(' expr ')'
/// Exponents must be nonnegative integer literals. A '/' divisor must
/// evaluate to a nonzero hbar-free constant, so rationals like 1/2 and
/// forms like p^2/2 are exact.
Poly parse_poly(const std::string& text, const VarTablePtr& vars);

/// Parse an expression that must evaluate to a constant scalar.
Scalar parse_scalar(const std::string& text);

/// Parse a constant that must be hbar-free (a Gaussian rational).
Gaussian parse_gaussian(const std::string& text);

}  // namespace algred
