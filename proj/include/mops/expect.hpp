#ifndef MOPS_EXPECT_HPP
#define MOPS_EXPECT_HPP

#include <optional>
#include <vector>

#include "mops/orthopoly.hpp"
#include "mops/partition.hpp"
#include "mops/scalar.hpp"
#include "mops/symfun.hpp"

namespace mops {

// Hermite: e^{-x^2/2}; Laguerre: x^gamma e^{-x}; Jacobi: x^g1 (1-x)^g2 on [0,1];
// each times |Vandermonde|^{2/alpha}.
struct Ensemble {
  Family family = Family::Hermite;
  RationalFunction alpha;
  RationalFunction gamma;
  RationalFunction g1, g2;
  VarCount vars = VarCount::generic();

  static Ensemble hermite(RationalFunction alpha, VarCount vars);
  static Ensemble laguerre(RationalFunction alpha, RationalFunction gamma, VarCount vars);
  static Ensemble jacobi(RationalFunction alpha, RationalFunction g1, RationalFunction g2, VarCount vars);
};

RationalFunction expectJackC(const Ensemble& ens, const Partition& kappa);
// Linear combination in the C basis.
RationalFunction expectJackC(const Ensemble& ens, const SymExpr& jackC);
RationalFunction expectJackExpr(const Ensemble& ens, const ProductExpr& e);
RationalFunction expectMonomialExpr(const Ensemble& ens, const ProductExpr& e);

struct ConjectureEntry {
  Partition lambda;
  RationalFunction f;        // coefficient of C_lambda in m_[k]
  RationalFunction product;  // prod_{i >= 2} (-(i-1)/alpha)_{lambda_i}
  RationalFunction ratio;    // f / product, expected 1/n(lambda)
  std::optional<mpz_class> n;
  bool conforms = false;
  std::string note;
};

struct ConjectureReport {
  int k = 0;
  std::vector<ConjectureEntry> entries;
  bool allConform = true;
};

ConjectureEntry checkConjectureEntry(const RationalFunction& alpha, const Partition& lambda,
                                     const RationalFunction& f);
ConjectureReport conjectureCoefficients(const RationalFunction& alpha, int k, int cap = 8);

}  // namespace mops

#endif
