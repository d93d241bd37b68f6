#ifndef MOPS_TESTS_ORACLES_HPP
#define MOPS_TESTS_ORACLES_HPP

#include <map>
#include <vector>

#include "mops/jack.hpp"
#include "mops/partition.hpp"
#include "mops/scalar.hpp"
#include "mops/symfun.hpp"

// Independent reference computations for tests. None of these call the
// routines they are used to check.
namespace oracle {

using mops::Partition;
using mops::RationalFunction;

// (kappa choose sigma) from V(x+1)/V(1) = sum (kappa choose sigma) C_sigma(x)/C_sigma(1),
// with V the kappa Jack polynomial in the given normalization, m variables.
std::map<Partition, RationalFunction> binomialByDefinition(const RationalFunction& alpha, const Partition& kappa,
                                                           mops::Normalization norm, int m);

// Monic orthogonal polynomials p_0..p_kmax (ascending coefficient vectors)
// for the functional with the given moments (moments[0] = 1), by Gram-Schmidt.
std::vector<std::vector<RationalFunction>> monicOrthogonal(const std::vector<RationalFunction>& moments, int kmax);

// E[x^j] for the univariate weights: e^{-x^2/2}, x^g e^{-x}, x^g1 (1-x)^g2.
std::vector<RationalFunction> hermiteMoments(int count);
std::vector<RationalFunction> laguerreMoments(const RationalFunction& gamma, int count);
std::vector<RationalFunction> jacobiMoments(const RationalFunction& g1, const RationalFunction& g2, int count);

// Expectation of a symmetric polynomial (monomial basis, 1 or 2 variables)
// over the Hermite ensemble, via u = (x1+x2)/sqrt2, v = (x1-x2)/sqrt2 with
// E[v^{2t}] = prod_{q<t} (2/alpha + 1 + 2q).
RationalFunction hermiteExpectationSmall(const mops::SymExpr& monomialExpr, int n, const RationalFunction& alpha);

// Two-variable Laguerre (x^gamma e^{-x}) and Jacobi (x^g1 (1-x)^g2) expectations of a
// monomial-basis expression, Vandermonde power beta = 2/alpha even, by
// termwise Gamma / Beta integrals.
RationalFunction laguerreExpectationTwo(const mops::SymExpr& monomialExpr, int beta, const RationalFunction& gamma);
RationalFunction jacobiExpectationTwo(const mops::SymExpr& monomialExpr, int beta, const RationalFunction& g1,
                                      const RationalFunction& g2);

}  // namespace oracle

#endif
