#include "mops/jack.hpp"

#include "mops/binom.hpp"
#include "mops/cache.hpp"
#include "mops/errors.hpp"
#include "mops/explicit_poly.hpp"

namespace mops {

std::string_view normalizationName(Normalization n) {
  switch (n) {
    case Normalization::C: return "C";
    case Normalization::J: return "J";
    case Normalization::P: return "P";
  }
  return "?";
}

Basis jackBasis(Normalization n) {
  switch (n) {
    case Normalization::C: return Basis::JackC;
    case Normalization::J: return Basis::JackJ;
    case Normalization::P: return Basis::JackP;
  }
  return Basis::JackC;
}

Normalization normalizationOf(Basis b) {
  switch (b) {
    case Basis::JackC: return Normalization::C;
    case Basis::JackJ: return Normalization::J;
    case Basis::JackP: return Normalization::P;
    default: throw DomainError("not a Jack basis");
  }
}

namespace {

// alpha^k k!
RationalFunction alphaKFactorial(const RationalFunction& alpha, int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return alpha.pow(k) * RationalFunction(f);
}

struct JackKey {
  RationalFunction alpha;
  Partition kappa;
  int maxLength;
};

struct JackKeyLess {
  bool operator()(const JackKey& a, const JackKey& b) const {
    if (a.kappa != b.kappa) return a.kappa < b.kappa;
    if (a.maxLength != b.maxLength) return a.maxLength < b.maxLength;
    return RationalFunctionLess()(a.alpha, b.alpha);
  }
};

std::size_t termMapBytes(const TermMap& t) {
  std::size_t b = 64;
  for (const auto& [p, c] : t) b += 32 + 4 * p.length() + c.approxBytes();
  return b;
}

// C-normalized coefficients of m_lambda, l(lambda) <= maxLength.
TermMap computeJackC(const RationalFunction& alpha, const Partition& kappa, int maxLength) {
  TermMap coef;
  int k = kappa.weight();
  const auto& hp = hookProducts(alpha, kappa);
  coef.emplace(kappa, alphaKFactorial(alpha, k) / hp.c);
  RationalFunction rk = rho(alpha, kappa);
  RationalFunction twoOverAlpha = RationalFunction(2) / alpha;
  bool numericAlpha = alpha.isConstant();
  // Decreasing lexicographic order visits every mu dominating lambda first.
  for (const Partition& lambda : partitionsOf(k, maxLength)) {
    if (lambda == kappa || !dominatedBy(lambda, kappa)) continue;
    RationalFunction sum;
    const auto& parts = lambda.parts();
    int len = lambda.length();
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j)
        for (int t = 1; t <= parts[j]; ++t) {
          std::vector<int> mu = parts;
          mu[i] += t;
          mu[j] -= t;
          auto it = coef.find(Partition::fromUnsorted(mu));
          if (it == coef.end()) continue;
          sum += RationalFunction((parts[i] + t) - (parts[j] - t)) * it->second;
        }
    if (sum.isZero()) continue;
    RationalFunction denom = rk - rho(alpha, lambda);
    if (denom.isZero()) {
      if (numericAlpha) throw PoleError("Jack coefficient has a pole at alpha = " + alpha.toString());
      throw ConsistencyError("degenerate eigenvalue difference in Jack recurrence");
    }
    coef.emplace(lambda, twoOverAlpha * sum / denom);
  }
  return coef;
}

MemoCache<JackKey, TermMap, JackKeyLess>& jackCache() {
  static MemoCache<JackKey, TermMap, JackKeyLess> cache;
  return cache;
}

}  // namespace

RationalFunction normalizationFactor(Normalization from, Normalization to, const RationalFunction& alpha,
                                     const Partition& kappa) {
  if (from == to) return RationalFunction(1);
  checkAlpha(alpha);
  const auto& hp = hookProducts(alpha, kappa);
  RationalFunction akk = alphaKFactorial(alpha, kappa.weight());
  // Each of C, J, P relative to J: C = (akk/j) J, P = J / cPrime.
  auto relJ = [&](Normalization x) -> RationalFunction {
    switch (x) {
      case Normalization::C: return akk / hp.j;
      case Normalization::J: return RationalFunction(1);
      case Normalization::P: return hp.cPrime.inverse();
    }
    return RationalFunction(1);
  };
  // from_kappa = (relJ(from)/relJ(to)) to_kappa
  return relJ(from) / relJ(to);
}

RationalFunction jackLeadingCoefficient(const RationalFunction& alpha, const Partition& kappa, Normalization norm) {
  checkAlpha(alpha);
  const auto& hp = hookProducts(alpha, kappa);
  switch (norm) {
    case Normalization::C: return alphaKFactorial(alpha, kappa.weight()) / hp.c;
    case Normalization::J: return hp.cPrime;
    case Normalization::P: return RationalFunction(1);
  }
  return RationalFunction(1);
}

SymExpr jackExpand(const RationalFunction& alpha, const Partition& kappa, Normalization norm, VarCount vars) {
  checkAlpha(alpha);
  SymExpr out(Basis::Monomial, vars);
  if (!vars.admits(kappa)) return out;
  int k = kappa.weight();
  int maxLength = vars.isGeneric() ? k : std::min(vars.value(), k);
  JackKey key{alpha, kappa, maxLength};
  auto table = jackCache().getOrCompute(
      key, [&] { return computeJackC(alpha, kappa, maxLength); }, termMapBytes);
  RationalFunction f = normalizationFactor(Normalization::C, norm, alpha, kappa).inverse();
  for (const auto& [lambda, c] : *table) out.add(lambda, f.isOne() ? c : c * f);
  return out;
}

RationalFunction jackIdentityValue(const RationalFunction& alpha, const Partition& kappa, Normalization norm,
                                   const RationalFunction& m) {
  checkAlpha(alpha);
  // J_kappa(I_m) = alpha^k (m/alpha)_kappa
  RationalFunction jValue = alpha.pow(kappa.weight()) * gsfact(alpha, m / alpha, kappa);
  return jValue / normalizationFactor(Normalization::J, norm, alpha, kappa);
}

SymExpr applyDStar(const SymExpr& e, const RationalFunction& alpha, int nVars) {
  if (nVars < 0 || nVars > 6) throw DomainError("applyDStar supports at most 6 variables");
  checkAlpha(alpha);
  ExplicitPoly f = ExplicitPoly::fromSymExpr(e, nVars);
  ExplicitPoly r = secondOrderOperator(f, 2) + pairOperator(f, 2).scaled(RationalFunction(2) / alpha);
  return r.toSymExpr();
}

}  // namespace mops
