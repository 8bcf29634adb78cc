#pragma once

#include <string>
#include <string_view>

#include "descent/descent_algebra.hpp"

namespace descent {

/// Parses a linear combination of basis elements with rational
/// coefficients, e.g. "x[1] + 1/2*y[] - 3 xp[1,2]" or "(x[1] - x[2]) * xS".
///
///   expr   := term (('+' | '-') term)*
///   term   := factor (['*'] factor)*
///   factor := ('+' | '-') factor | number | basis | '(' expr ')'
///   number := digits ['/' digits]
///   basis  := ('x' | 'y' | 'xp') '[' labels ']' | 'xS'
///
/// Labels are the node labels of the system (1-based, "1p" for s1' in
/// type D).  A bare number c stands for c x_S.  Products are taken in the
/// descent algebra.  Throws ParseError with the offending position.
DescentVector parse_expression(const AlgebraPtr& a, std::string_view text);

/// Terms sorted by decreasing |I|, then lexicographically; "0" for zero.
/// The full subset prints as "xS" in the x-basis.
std::string format_expression(const DescentVector& v, Basis basis);

std::string basis_prefix(Basis basis);
/// "x", "y" or "xp"; throws ParseError otherwise.
Basis parse_basis(std::string_view name);

}  // namespace descent
