#pragma once

#include <string>
#include <string_view>

#include "hesspatch/order.hpp"
#include "hesspatch/polynomial.hpp"

namespace hesspatch {

/// Parses text such as "-x[1,4] + x[2,3]" or "x[1,1]^2*x[2,1] - 3/2".
///
/// Grammar (whitespace ignored):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ['^' integer]
///   base   := integer ['/' integer] | variable | '(' expr ')'
/// Variables are either x[i,j] chart tokens or plain identifiers, and must
/// belong to the ring. Throws ParseError for unknown variables and bad
/// syntax, DomainError for coefficients outside the ring's domain.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

/// Canonical text form with terms in decreasing order under `order`.
std::string format_poly(const Polynomial& f, const MonomialOrder& order);
/// Same, using the canonical variable-index order.
std::string format_poly(const Polynomial& f);
std::string format_monomial(const Monomial& m, const VariableSet& vars);

}  // namespace hesspatch
