#include "mops/orthopoly.hpp"

#include <cmath>

#include "mops/binom.hpp"
#include "mops/cache.hpp"
#include "mops/errors.hpp"
#include "mops/explicit_poly.hpp"
#include "mops/jack.hpp"

namespace mops {

std::string_view familyName(Family f) {
  switch (f) {
    case Family::Hermite: return "hermite";
    case Family::Laguerre: return "laguerre";
    case Family::Jacobi: return "jacobi";
  }
  return "?";
}

RationalFunction OrthoExpansion::coefficient(const Partition& sigma) const {
  auto it = coeffs.find(sigma);
  return it == coeffs.end() ? RationalFunction() : it->second;
}

SymExpr OrthoExpansion::asJackC() const {
  SymExpr e(Basis::JackC, vars);
  for (const auto& [s, c] : coeffs) e.add(s, c);
  return e;
}

SymExpr OrthoExpansion::asMonomial() const { return toMonomial(alpha, asJackC()); }

namespace {

using CoeffMap = std::map<Partition, RationalFunction, PartitionDesc>;

RationalFunction quotient(const RationalFunction& num, const RationalFunction& den, const char* what) {
  if (den.isZero()) throw PoleError(std::string(what) + " has a vanishing denominator at these parameters");
  return num / den;
}

RationalFunction signPow(int s) { return RationalFunction(s % 2 ? -1 : 1); }

void requireAboveMinusOne(const RationalFunction& v, const char* name) {
  if (v.isConstant() && v.constantValue() <= -1) throw DomainError(std::string(name) + " must be > -1");
}

// Subpartitions of kappa, heaviest first.
std::vector<Partition> byDecreasingWeight(const Partition& kappa) {
  std::vector<Partition> out(subpartitionsOf(kappa).begin(), subpartitionsOf(kappa).end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Partition& a, const Partition& b) { return a.weight() > b.weight(); });
  return out;
}

RationalFunction identityC(const RationalFunction& alpha, const Partition& s, const RationalFunction& n) {
  return jackIdentityValue(alpha, s, Normalization::C, n);
}

struct OrthoKey {
  int family;
  Partition kappa;
  RationalFunction alpha, p1, p2;
  int n;
};

struct OrthoKeyLess {
  bool operator()(const OrthoKey& a, const OrthoKey& b) const {
    if (a.family != b.family) return a.family < b.family;
    if (a.kappa != b.kappa) return a.kappa < b.kappa;
    if (a.n != b.n) return a.n < b.n;
    RationalFunctionLess less;
    if (a.alpha != b.alpha) return less(a.alpha, b.alpha);
    if (a.p1 != b.p1) return less(a.p1, b.p1);
    return less(a.p2, b.p2);
  }
};

MemoCache<OrthoKey, CoeffMap, OrthoKeyLess>& orthoCache() {
  static MemoCache<OrthoKey, CoeffMap, OrthoKeyLess> cache;
  return cache;
}

std::size_t coeffBytes(const CoeffMap& m) {
  std::size_t b = 64;
  for (const auto& [p, c] : m) b += 32 + c.approxBytes();
  return b;
}

OrthoExpansion shell(Family f, const RationalFunction& alpha, const Partition& kappa, VarCount vars) {
  OrthoExpansion e;
  e.family = f;
  e.kappa = kappa;
  e.alpha = alpha;
  e.vars = vars;
  return e;
}

template <class F>
OrthoExpansion cached(OrthoExpansion e, int tag, const RationalFunction& p1, const RationalFunction& p2, F&& compute) {
  checkAlpha(e.alpha);
  // Fewer variables than rows: the polynomial is zero.
  if (!e.vars.admits(e.kappa)) return e;
  OrthoKey key{tag, e.kappa, e.alpha, p1, p2, e.vars.isGeneric() ? -1 : e.vars.value()};
  e.coeffs = *orthoCache().getOrCompute(key, compute, coeffBytes);
  return e;
}

// Coefficients of Chat_sigma = C_sigma / C_sigma(I_n), top-down from
// Chat_kappa with coefficient C_kappa(I_n).
CoeffMap hermiteHat(const RationalFunction& alpha, const Partition& kappa, const RationalFunction& n) {
  CoeffMap hat;
  int k = kappa.weight();
  hat.emplace(kappa, identityC(alpha, kappa, n));
  auto get = [&](const std::optional<Partition>& p) -> const RationalFunction* {
    if (!p) return nullptr;
    auto it = hat.find(*p);
    return it == hat.end() ? nullptr : &it->second;
  };
  RationalFunction invAlpha = alpha.inverse();
  for (const Partition& sigma : byDecreasingWeight(kappa)) {
    int s = sigma.weight();
    if (sigma == kappa || (k - s) % 2) continue;
    RationalFunction sum;
    int rows = sigma.length() + 1;
    for (int j = 1; j <= rows; ++j) {
      auto sj = sigma.incremented(j - 1);
      if (!sj) continue;
      RationalFunction bj = contiguous(alpha, sigma, j);
      for (int i = 1; i <= sj->length() + 1; ++i) {
        auto sji = sj->incremented(i - 1);
        const RationalFunction* c = get(sji);
        if (!c) continue;
        RationalFunction term = contiguous(alpha, *sj, i) * bj * *c;
        if (i != j) term *= RationalFunction(sigma[i - 1] - sigma[j - 1]) - RationalFunction(i - j) * invAlpha;
        sum += term;
      }
    }
    if (!sum.isZero()) hat.emplace(sigma, -sum / RationalFunction(k - s));
  }
  return hat;
}

CoeffMap hatToPlain(const CoeffMap& hat, const RationalFunction& alpha, const RationalFunction& n) {
  CoeffMap out;
  for (const auto& [s, c] : hat) out.emplace(s, c / identityC(alpha, s, n));
  return out;
}

// Dense polynomial in the formal parameter r.
using RPoly = std::vector<RationalFunction>;

RPoly rMul(const RPoly& a, const RPoly& b) {
  RPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

CoeffMap hermiteLimitFormula(const RationalFunction& alpha, const Partition& kappa, const RationalFunction& n,
                             const std::optional<Partition>& only = std::nullopt) {
  int k = kappa.weight();
  RationalFunction invAlpha = alpha.inverse();
  RationalFunction c0 = (n + alpha - 1) / alpha;
  const auto& subs = subpartitionsOf(kappa);
  // F_mu = (r + c0)_kappa / (r + c0)_mu
  std::map<Partition, RPoly> F;
  for (const Partition& mu : subs) {
    RPoly f{RationalFunction(1)};
    for (int i = 0; i < kappa.length(); ++i)
      for (int t = mu[i]; t < kappa[i]; ++t)
        f = rMul(f, RPoly{c0 - RationalFunction(i) * invAlpha + RationalFunction(t), RationalFunction(1)});
    F.emplace(mu, std::move(f));
  }
  RationalFunction cKappa = identityC(alpha, kappa, n);
  CoeffMap out;
  for (const Partition& sigma : subs) {
    if (only && sigma != *only) continue;
    int s = sigma.weight();
    if ((k - s) % 2) continue;
    int half = (k + s) / 2;
    RationalFunction sum;
    for (const Partition& mu : subs) {
      int j = mu.weight();
      if (j < s || j > half || !isSubpartition(sigma, mu)) continue;
      const RPoly& f = F.at(mu);
      std::size_t deg = half - j;
      if (deg >= f.size() || f[deg].isZero()) continue;
      sum += signPow(k - j) * gbinomial(alpha, kappa, mu) * gbinomial(alpha, mu, sigma) * f[deg];
    }
    if (!sum.isZero()) out.emplace(sigma, sum * cKappa / identityC(alpha, sigma, n));
  }
  return out;
}

CoeffMap laguerreCoeffs(const RationalFunction& alpha, const Partition& kappa, const RationalFunction& gamma,
                        const RationalFunction& n) {
  RationalFunction shift = gamma + (n - 1) / alpha + 1;
  RationalFunction top = gsfact(alpha, shift, kappa) * identityC(alpha, kappa, n);
  CoeffMap out;
  for (const auto& [sigma, b] : gbinomialTable(alpha, kappa)) {
    RationalFunction den = gsfact(alpha, shift, sigma) * identityC(alpha, sigma, n);
    out.emplace(sigma, signPow(sigma.weight()) * quotient(b * top, den, "Laguerre coefficient"));
  }
  return out;
}

CoeffMap jacobiCoeffs(const RationalFunction& alpha, const Partition& kappa, const RationalFunction& g1,
                      const RationalFunction& g2, const RationalFunction& n) {
  int k = kappa.weight();
  RationalFunction G = g1 + g2 + RationalFunction(2) / alpha * (n - 1) + 2;
  RationalFunction rk = rho(alpha, kappa);
  CoeffMap hat;
  hat.emplace(kappa, RationalFunction(1));
  for (const Partition& sigma : byDecreasingWeight(kappa)) {
    if (sigma == kappa) continue;
    RationalFunction sum;
    for (int i = 1; i <= sigma.length() + 1; ++i) {
      auto up = sigma.incremented(i - 1);
      if (!up) continue;
      auto it = hat.find(*up);
      if (it == hat.end()) continue;
      sum += contiguous(alpha, sigma, i) * it->second;
    }
    if (sum.isZero()) continue;
    RationalFunction den = G * RationalFunction(k - sigma.weight()) + rk - rho(alpha, sigma);
    hat.emplace(sigma, quotient(sum, den, "Jacobi recurrence"));
  }
  RationalFunction shift = g1 + (n - 1) / alpha + 1;
  RationalFunction top = gsfact(alpha, shift, kappa) * identityC(alpha, kappa, n);
  CoeffMap out;
  for (const auto& [sigma, h] : hat) {
    RationalFunction den = gsfact(alpha, shift, sigma) * identityC(alpha, sigma, n);
    out.emplace(sigma, signPow(sigma.weight()) * quotient(h * top, den, "Jacobi coefficient"));
  }
  return out;
}

}  // namespace

OrthoExpansion hermite(const RationalFunction& alpha, const Partition& kappa, VarCount vars) {
  OrthoExpansion e = shell(Family::Hermite, alpha, kappa, vars);
  return cached(std::move(e), 0, RationalFunction(), RationalFunction(), [&] {
    RationalFunction n = vars.asScalar();
    return hatToPlain(hermiteHat(alpha, kappa, n), alpha, n);
  });
}

OrthoExpansion hermite2(const RationalFunction& alpha, const Partition& kappa, VarCount vars) {
  OrthoExpansion e = shell(Family::Hermite, alpha, kappa, vars);
  return cached(std::move(e), 1, RationalFunction(), RationalFunction(),
                [&] { return hermiteLimitFormula(alpha, kappa, vars.asScalar()); });
}

OrthoExpansion laguerre(const RationalFunction& alpha, const Partition& kappa, const RationalFunction& gamma,
                        VarCount vars) {
  requireAboveMinusOne(gamma, "gamma");
  OrthoExpansion e = shell(Family::Laguerre, alpha, kappa, vars);
  e.gamma = gamma;
  return cached(std::move(e), 2, gamma, RationalFunction(),
                [&] { return laguerreCoeffs(alpha, kappa, gamma, vars.asScalar()); });
}

OrthoExpansion jacobi(const RationalFunction& alpha, const Partition& kappa, const RationalFunction& g1,
                      const RationalFunction& g2, VarCount vars) {
  requireAboveMinusOne(g1, "g1");
  requireAboveMinusOne(g2, "g2");
  OrthoExpansion e = shell(Family::Jacobi, alpha, kappa, vars);
  e.g1 = g1;
  e.g2 = g2;
  return cached(std::move(e), 3, g1, g2, [&] { return jacobiCoeffs(alpha, kappa, g1, g2, vars.asScalar()); });
}

RationalFunction evalAtZero(const OrthoExpansion& e) { return e.coefficient(Partition()); }

RationalFunction hermiteConstantTerm(const RationalFunction& alpha, const Partition& kappa, VarCount vars) {
  checkAlpha(alpha);
  if (!vars.admits(kappa) || kappa.weight() % 2) return RationalFunction();
  CoeffMap c = hermiteLimitFormula(alpha, kappa, vars.asScalar(), Partition());
  auto it = c.find(Partition());
  return it == c.end() ? RationalFunction() : it->second;
}

RationalFunction evalAtScalarIdentity(const OrthoExpansion& e, const RationalFunction& x, int m) {
  if (e.vars.isGeneric() || e.vars.value() != m)
    throw DomainError("expansion variable count does not match m = " + std::to_string(m));
  RationalFunction total;
  RationalFunction mm(m);
  for (const auto& [s, c] : e.coeffs) total += c * x.pow(s.weight()) * identityC(e.alpha, s, mm);
  return total;
}

double evalAtScalarIdentity(const OrthoExpansion& e, double x, int m) {
  RationalFunction v = evalAtScalarIdentity(e, RationalFunction(mpq_class(x)), m);
  return v.toDouble();
}

mpq_class evalAtPoint(const OrthoExpansion& e, const std::vector<mpq_class>& xs) {
  SymExpr c = e.asJackC();
  if (c.vars().isGeneric()) c = c.withVars(VarCount::numeric(static_cast<int>(xs.size())));
  return evalExact(c, xs, e.alpha);
}

std::vector<double> laguerreHermiteLimitCheck(const RationalFunction& alpha, const Partition& kappa, int n,
                                              const std::vector<long>& gammaGrid, const std::vector<double>& xs) {
  if (static_cast<int>(xs.size()) != n) throw DomainError("point dimension must equal n");
  VarCount vars = VarCount::numeric(n);
  std::vector<mpq_class> x;
  for (double v : xs) x.emplace_back(v);
  int k = kappa.weight();
  mpq_class h = evalAtPoint(hermite(alpha, kappa, vars), x);
  if (k % 2) h = -h;
  std::vector<double> out;
  for (long g : gammaGrid) {
    if (g <= 0) throw DomainError("gamma grid must be positive");
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), mpz_class(g).get_mpz_t());
    mpq_class sq = root * root == g ? mpq_class(root) : mpq_class(std::sqrt(static_cast<double>(g)));
    std::vector<mpq_class> y;
    for (const auto& v : x) y.push_back(mpq_class(g) + sq * v);
    mpq_class l = evalAtPoint(laguerre(alpha, kappa, RationalFunction(g), vars), y);
    // gamma^{-k/2} = sq^{-k}
    mpq_class scale = 1;
    for (int i = 0; i < k; ++i) scale /= sq;
    mpq_class d = l * scale - h;
    out.push_back(std::fabs(d.get_d()));
  }
  return out;
}

EigenCheck checkEigenfunction(const OrthoExpansion& e, int n) {
  if (n < 1 || n > 6) throw DomainError("operator checks support 1 to 6 variables");
  OrthoExpansion local = e;
  if (!e.vars.isGeneric() && e.vars.value() != n) throw DomainError("variable count mismatch");
  SymExpr mono = local.asJackC();
  if (mono.vars().isGeneric()) {
    // Bind the symbolic n to the explicit variable count.
    SymExpr bound(Basis::JackC, VarCount::numeric(n));
    for (const auto& [s, c] : mono.terms()) bound.add(s, c.substitute({{Param::N, mpq_class(n)}}));
    mono = bound;
  }
  ExplicitPoly f = ExplicitPoly::fromSymExpr(toMonomial(e.alpha, mono), n);
  RationalFunction twoOverAlpha = RationalFunction(2) / e.alpha;
  int k = e.kappa.weight();
  auto deltaStar = [&] { return secondOrderOperator(f, 1) + pairOperator(f, 1).scaled(twoOverAlpha); };
  ExplicitPoly image(n);
  RationalFunction ev;
  switch (e.family) {
    case Family::Hermite: {
      ExplicitPoly dss = secondOrderOperator(f, 0) + pairOperator(f, 0).scaled(twoOverAlpha);
      image = dss - firstOrderOperator(f, 1);
      ev = RationalFunction(-k);
      break;
    }
    case Family::Laguerre: {
      RationalFunction g = e.gamma.substitute({{Param::N, mpq_class(n)}});
      image = firstOrderOperator(f, 1) - deltaStar() - firstOrderOperator(f, 0).scaled(g + 1);
      ev = RationalFunction(k);
      break;
    }
    case Family::Jacobi: {
      RationalFunction g1 = e.g1.substitute({{Param::N, mpq_class(n)}});
      RationalFunction g2 = e.g2.substitute({{Param::N, mpq_class(n)}});
      ExplicitPoly dStar = secondOrderOperator(f, 2) + pairOperator(f, 2).scaled(twoOverAlpha);
      image = dStar + firstOrderOperator(f, 1).scaled(g1 + g2 + 2) - deltaStar() -
              firstOrderOperator(f, 0).scaled(g1 + 1);
      RationalFunction G = g1 + g2 + twoOverAlpha * RationalFunction(n - 1) + 2;
      ev = rho(e.alpha, e.kappa) + RationalFunction(k) * G;
      break;
    }
  }
  SymExpr img = image.toSymExpr();
  SymExpr expected = f.scaled(ev).toSymExpr();
  return EigenCheck{img == expected, ev, img};
}

}  // namespace mops
