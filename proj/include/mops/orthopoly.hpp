#ifndef MOPS_ORTHOPOLY_HPP
#define MOPS_ORTHOPOLY_HPP

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "mops/partition.hpp"
#include "mops/scalar.hpp"
#include "mops/symfun.hpp"

namespace mops {

enum class Family { Hermite, Laguerre, Jacobi };
std::string_view familyName(Family f);

// sum_sigma coeffs[sigma] * C_sigma (plain C basis).
struct OrthoExpansion {
  Family family;
  Partition kappa;
  RationalFunction alpha;
  RationalFunction gamma;  // Laguerre
  RationalFunction g1, g2;  // Jacobi
  VarCount vars = VarCount::generic();
  std::map<Partition, RationalFunction, PartitionDesc> coeffs;

  RationalFunction coefficient(const Partition& sigma) const;
  SymExpr asJackC() const;
  SymExpr asMonomial() const;
};

OrthoExpansion hermite(const RationalFunction& alpha, const Partition& kappa, VarCount vars);
// Same polynomial through the limiting formula in the formal parameter r.
OrthoExpansion hermite2(const RationalFunction& alpha, const Partition& kappa, VarCount vars);
OrthoExpansion laguerre(const RationalFunction& alpha, const Partition& kappa, const RationalFunction& gamma,
                        VarCount vars);
OrthoExpansion jacobi(const RationalFunction& alpha, const Partition& kappa, const RationalFunction& g1,
                      const RationalFunction& g2, VarCount vars);

RationalFunction evalAtZero(const OrthoExpansion& e);
// H_kappa(0) from the limiting formula, without the other coefficients.
RationalFunction hermiteConstantTerm(const RationalFunction& alpha, const Partition& kappa, VarCount vars);
// Value at x*I_m; the expansion must have m numeric variables.
RationalFunction evalAtScalarIdentity(const OrthoExpansion& e, const RationalFunction& x, int m);
double evalAtScalarIdentity(const OrthoExpansion& e, double x, int m);
// Value at an arbitrary point (numeric alpha and parameters).
mpq_class evalAtPoint(const OrthoExpansion& e, const std::vector<mpq_class>& xs);

// |gamma^{-k/2} L_kappa(gamma + sqrt(gamma) x) - (-1)^k H_kappa(x)| for each
// gamma in the grid.
std::vector<double> laguerreHermiteLimitCheck(const RationalFunction& alpha, const Partition& kappa, int n,
                                              const std::vector<long>& gammaGrid, const std::vector<double>& xs);

struct EigenCheck {
  bool holds;
  RationalFunction expected;  // eigenvalue
  SymExpr image;              // operator applied, monomial basis
};
// Applies the family's differential operator in n explicit variables:
//   Hermite:  delta** - E                                eigenvalue -k
//   Laguerre: E - delta* - (gamma+1) eps                 eigenvalue k
//   Jacobi:   D* + (g1+g2+2) E - delta* - (g1+1) eps     eigenvalue rho + k G
EigenCheck checkEigenfunction(const OrthoExpansion& e, int n);

}  // namespace mops

#endif
