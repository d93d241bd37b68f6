#ifndef MOPS_PARSE_HPP
#define MOPS_PARSE_HPP

#include <string_view>
#include <vector>

#include "mops/scalar.hpp"
#include "mops/symfun.hpp"

namespace mops {

// expr   := term (('+'|'-') term)*
// term   := unary (('*'|'/') unary)*
// unary  := '-' unary | factor
// factor := base ('^' uint)?
// base   := ('m'|'p'|'C'|'J'|'P') '[' (uint (',' uint)*)? ']' | number | name | '(' expr ')'
//
// Names are the parameters a, n, g, g1, g2, r. Divisors must be free of basis
// elements. Scalar subtrees are folded, products and sums are flattened.
ProductExpr parseExpression(std::string_view text);

// Same grammar without basis elements.
RationalFunction parseScalar(std::string_view text);

// Comma separated scalars; the empty string gives an empty list.
std::vector<RationalFunction> parseScalarList(std::string_view text);

// "3,2,1", "[3,2,1]" or "" (empty partition).
Partition parsePartition(std::string_view text);

}  // namespace mops

#endif
