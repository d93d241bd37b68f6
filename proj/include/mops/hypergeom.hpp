#ifndef MOPS_HYPERGEOM_HPP
#define MOPS_HYPERGEOM_HPP

#include <optional>
#include <vector>

#include "mops/partition.hpp"
#include "mops/scalar.hpp"

namespace mops {

// Either an explicit point (x_1..x_m) or x * I_m.
struct HypergeomArgument {
  bool identity = true;
  std::vector<RationalFunction> xs;
  RationalFunction x;
  int m = 0;

  static HypergeomArgument point(std::vector<RationalFunction> xs);
  static HypergeomArgument scalarIdentity(RationalFunction x, int m);
  int variables() const { return identity ? m : static_cast<int>(xs.size()); }
  bool isNumeric() const;
};

struct HypergeomSpec {
  RationalFunction alpha;
  std::vector<RationalFunction> upper;
  std::vector<RationalFunction> lower;
  HypergeomArgument argument;
  std::optional<int> limit;         // max total degree L
  std::optional<double> tolerance;  // relative layer tolerance
  int degreeCap = 400;              // tolerance mode only
};

struct HypergeomResult {
  RationalFunction exact;  // partial sum through `degree`
  double value = 0;        // exact.toDouble() when numeric
  bool numeric = false;
  int degree = 0;
  bool terminated = false;  // polynomial series summed completely
  bool radiusFlag = false;  // p = q + 1
};

// Largest degree with a nonzero layer when some upper parameter is a
// nonpositive integer -p: p times the number of variables.
std::optional<int> terminationDegree(const HypergeomSpec& spec);
// sum_{kappa |- k, l(kappa) <= m} prod (a_i)_kappa / (k! prod (b_j)_kappa) C_kappa(x)
RationalFunction hypergeomLayer(const HypergeomSpec& spec, int k);
HypergeomResult ghypergeom(const HypergeomSpec& spec);

// density(x) = constant * sqrt(root/pi) * exp(-expCoefficient * x^2) * sum_j poly[j] x^j
struct GaussianPolyForm {
  mpq_class constant;
  mpq_class root;
  mpq_class expCoefficient;
  std::vector<mpq_class> poly;

  double operator()(double x) const;
  // Moves square factors of root into constant; root becomes a squarefree integer.
  GaussianPolyForm canonical() const;
};

// rho(x) = exp(-m x / 2) * sum_j poly[j] x^j, unnormalized.
struct SmallestEigForm {
  RationalFunction alpha;
  int p = 0;
  int m = 0;
  std::vector<RationalFunction> poly;      // poly[j] multiplies x^j
  std::vector<RationalFunction> f20Layers;  // layers of 2F0 at -2 I_{m-1} (x factored out)
};

SmallestEigForm smallestEigForm(const RationalFunction& alpha, int p, int m);
double smallestEigDensity(const RationalFunction& alpha, int p, int m, double x);

struct NormalizedDensity {
  SmallestEigForm form;
  double mass = 0;  // integral used for normalization
  double cutoff = 0;
  double operator()(double x) const;
};
NormalizedDensity normalizedSmallestEigDensity(const RationalFunction& alpha, int p, int m);

struct CdfResult {
  double value = 0;  // clamped to [0,1]
  double raw = 0;
  bool clamped = false;
  int degree = 0;
};
// P[l_1 < x] for the Laguerre ensemble with weight x^gamma e^{-x/2}.
CdfResult largestEigCDF(const RationalFunction& alpha, const RationalFunction& gamma, int m, double x, double tol);

// Per-eigenvalue level density of the Hermite ensemble, beta = 2/alpha even.
GaussianPolyForm levelDensityForm(int beta, int n, bool scaled);
double levelDensity(int beta, int n, double x);
// sqrt(2 n beta) * rho_n(x sqrt(2 n beta))
double scaledLevelDensity(int beta, int n, double x);

}  // namespace mops

#endif
