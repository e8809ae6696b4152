#pragma once

#include <string>
#include <string_view>

#include "coulomb/shiftop.hpp"

namespace coulomb {

// Parses the textual operator format: sums of products of rationals,
// variables (w[1,2], t1, hbar, ...), shift monomials u[i,r]^k, powers and
// parenthesized subexpressions. '/' and negative powers divide, and are
// only accepted for scalars and admissible linear forms. Variable names
// must already exist in the algebra's intern table.
ShiftOperator parse_operator(const ShiftAlgebra& alg, std::string_view text);

// Same grammar without shift monomials; interns unknown variable names.
Poly parse_poly(std::string_view text);

}  // namespace coulomb
