#ifndef MOPS_JACK_HPP
#define MOPS_JACK_HPP

#include <string_view>

#include "mops/partition.hpp"
#include "mops/scalar.hpp"
#include "mops/symfun.hpp"

namespace mops {

enum class Normalization { C, J, P };

std::string_view normalizationName(Normalization n);
Basis jackBasis(Normalization n);
Normalization normalizationOf(Basis b);  // b must be a Jack basis

// Jack polynomial in the monomial basis; zero when l(kappa) > n.
SymExpr jackExpand(const RationalFunction& alpha, const Partition& kappa, Normalization norm, VarCount vars);

// Coefficient of m_kappa in the given normalization.
RationalFunction jackLeadingCoefficient(const RationalFunction& alpha, const Partition& kappa, Normalization norm);

// Value at (1, ..., 1) with m variables; m may be symbolic.
RationalFunction jackIdentityValue(const RationalFunction& alpha, const Partition& kappa, Normalization norm,
                                   const RationalFunction& m);

// factor with V_kappa = factor * W_kappa.
RationalFunction normalizationFactor(Normalization from, Normalization to, const RationalFunction& alpha,
                                     const Partition& kappa);

// Laplace-Beltrami operator D* applied to a monomial-basis expression.
SymExpr applyDStar(const SymExpr& e, const RationalFunction& alpha, int nVars);

}  // namespace mops

#endif
