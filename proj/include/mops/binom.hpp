#ifndef MOPS_BINOM_HPP
#define MOPS_BINOM_HPP

#include <map>

#include "mops/partition.hpp"
#include "mops/scalar.hpp"

namespace mops {

// r (r+1) ... (r+k-1)
RationalFunction sfact(const RationalFunction& r, int k);
// prod_i (r - (i-1)/alpha)_{kappa_i}
RationalFunction gsfact(const RationalFunction& alpha, const RationalFunction& r, const Partition& kappa);
// Multivariate Gamma function, floating point.
double mvGamma(double alpha, double a, int m);
// log |Gamma_m^alpha(a)|
double logMvGamma(double alpha, double a, int m);

// (sigma^(i) choose sigma), i is a 1-based row index.
RationalFunction contiguous(const RationalFunction& alpha, const Partition& sigma, int i);
// (kappa choose sigma)
RationalFunction gbinomial(const RationalFunction& alpha, const Partition& kappa, const Partition& sigma);
// All nonzero (kappa choose sigma) for one kappa, keyed by sigma.
const std::map<Partition, RationalFunction>& gbinomialTable(const RationalFunction& alpha, const Partition& kappa);

}  // namespace mops

#endif
