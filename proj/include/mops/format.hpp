#ifndef MOPS_FORMAT_HPP
#define MOPS_FORMAT_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mops/scalar.hpp"
#include "mops/symfun.hpp"

namespace mops {

// Canonical text of an expression tree; parseExpression reads it back to a
// tree with the same canonical text.
std::string formatExpression(const ProductExpr& e);

// {basis, varMode, nVars?, terms: [{partition, coeff}]}, terms in decreasing
// lexicographic order.
nlohmann::ordered_json symExprJson(const SymExpr& e);

// Shortest text that reads back to the same double.
std::string formatDouble(double v);

void writeCsv(std::ostream& os, const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& rows);

}  // namespace mops

#endif
