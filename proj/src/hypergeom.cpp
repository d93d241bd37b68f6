#include "mops/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "mops/binom.hpp"
#include "mops/errors.hpp"
#include "mops/jack.hpp"
#include "mops/orthopoly.hpp"
#include "mops/symfun.hpp"

namespace mops {

HypergeomArgument HypergeomArgument::point(std::vector<RationalFunction> xs) {
  HypergeomArgument a;
  a.identity = false;
  a.xs = std::move(xs);
  return a;
}

HypergeomArgument HypergeomArgument::scalarIdentity(RationalFunction x, int m) {
  if (m < 0) throw DomainError("number of variables must be nonnegative");
  HypergeomArgument a;
  a.identity = true;
  a.x = std::move(x);
  a.m = m;
  return a;
}

bool HypergeomArgument::isNumeric() const {
  if (identity) return x.isConstant();
  return std::all_of(xs.begin(), xs.end(), [](const RationalFunction& v) { return v.isConstant(); });
}

namespace {

std::optional<long> nonpositiveInteger(const RationalFunction& a) {
  if (!a.isConstant()) return std::nullopt;
  mpq_class q = a.constantValue();
  if (q.get_den() != 1 || q > 0) return std::nullopt;
  return -q.get_num().get_si();
}

// m_lambda at a point with rational-function coordinates.
RationalFunction monomialAt(const Partition& lambda, const std::vector<RationalFunction>& xs) {
  int n = static_cast<int>(xs.size());
  if (lambda.length() > n) return RationalFunction();
  std::vector<int> e(n, 0);
  for (int i = 0; i < lambda.length(); ++i) e[i] = lambda[i];
  std::sort(e.begin(), e.end());
  RationalFunction total;
  do {
    RationalFunction t(1);
    for (int i = 0; i < n; ++i)
      if (e[i]) t *= xs[i].pow(e[i]);
    total += t;
  } while (std::next_permutation(e.begin(), e.end()));
  return total;
}

RationalFunction jackCAt(const RationalFunction& alpha, const Partition& kappa, const HypergeomArgument& arg) {
  int m = arg.variables();
  if (kappa.length() > m) return RationalFunction();
  if (arg.identity)
    return arg.x.pow(kappa.weight()) * jackIdentityValue(alpha, kappa, Normalization::C, RationalFunction(m));
  SymExpr c = jackExpand(alpha, kappa, Normalization::C, VarCount::numeric(m));
  RationalFunction total;
  for (const auto& [lambda, coef] : c.terms()) total += coef * monomialAt(lambda, arg.xs);
  return total;
}

mpq_class factorial(int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return mpq_class(f);
}

mpq_class horner(const std::vector<mpq_class>& poly, const mpq_class& x) {
  mpq_class v = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = v * x + *it;
  return v;
}

// Numeric parameters throughout: the same layer in plain rationals.
mpq_class gsfactQ(const mpq_class& alpha, const mpq_class& a, const Partition& kappa) {
  mpq_class out = 1;
  for (int i = 0; i < kappa.length(); ++i) {
    mpq_class base = a - mpq_class(i) / alpha;
    for (int t = 0; t < kappa[i]; ++t) out *= base + t;
  }
  return out;
}

// C_kappa(I_m) = alpha^{2k} k! (m/alpha)_kappa / (c c')
mpq_class identityCQ(const mpq_class& alpha, const Partition& kappa, int m) {
  int k = kappa.weight();
  mpq_class v = factorial(k) * gsfactQ(alpha, mpq_class(m) / alpha, kappa);
  for (int i = 0; i < 2 * k; ++i) v *= alpha;
  Partition conj = conjugate(kappa);
  for (int r = 0; r < kappa.length(); ++r)
    for (int c = 0; c < kappa[r]; ++c) {
      int armLen = kappa[r] - c - 1, legLen = conj[c] - r - 1;
      v /= (legLen + alpha * (1 + armLen)) * (legLen + 1 + alpha * armLen);
    }
  return v;
}

bool allConstant(const std::vector<RationalFunction>& v) {
  return std::all_of(v.begin(), v.end(), [](const RationalFunction& x) { return x.isConstant(); });
}

mpq_class numericLayer(const HypergeomSpec& spec, int k) {
  mpq_class alpha = spec.alpha.constantValue();
  mpq_class x = spec.argument.x.constantValue();
  int m = spec.argument.m;
  std::vector<mpq_class> up, low;
  for (const auto& a : spec.upper) up.push_back(a.constantValue());
  for (const auto& b : spec.lower) low.push_back(b.constantValue());
  mpq_class total = 0;
  for (const Partition& kappa : partitionsOf(k, m)) {
    mpq_class t = 1;
    for (const auto& a : up) t *= gsfactQ(alpha, a, kappa);
    if (t == 0) continue;
    for (const auto& b : low) {
      mpq_class pb = gsfactQ(alpha, b, kappa);
      if (pb == 0)
        throw PoleError("lower parameter " + b.get_str() + " gives a zero Pochhammer symbol at [" +
                        kappa.toString() + "]");
      t /= pb;
    }
    total += t * identityCQ(alpha, kappa, m);
  }
  mpq_class xk = 1;
  for (int i = 0; i < k; ++i) xk *= x;
  return total * xk / factorial(k);
}

}  // namespace

std::optional<int> terminationDegree(const HypergeomSpec& spec) {
  std::optional<int> best;
  for (const auto& a : spec.upper)
    if (auto p = nonpositiveInteger(a)) {
      int d = static_cast<int>(*p) * spec.argument.variables();
      if (!best || d < *best) best = d;
    }
  return best;
}

RationalFunction hypergeomLayer(const HypergeomSpec& spec, int k) {
  checkAlpha(spec.alpha);
  int m = spec.argument.variables();
  if (k == 0) return RationalFunction(1);
  if (spec.argument.identity && spec.argument.isNumeric() && spec.alpha.isConstant() && allConstant(spec.upper) &&
      allConstant(spec.lower))
    return RationalFunction(numericLayer(spec, k));
  RationalFunction total;
  RationalFunction kfact(factorial(k));
  for (const Partition& kappa : partitionsOf(k, m)) {
    RationalFunction num(1);
    for (const auto& a : spec.upper) {
      num *= gsfact(spec.alpha, a, kappa);
      if (num.isZero()) break;
    }
    if (num.isZero()) continue;
    RationalFunction den = kfact;
    for (const auto& b : spec.lower) {
      RationalFunction pb = gsfact(spec.alpha, b, kappa);
      if (pb.isZero())
        throw PoleError("lower parameter " + b.toString() + " gives a zero Pochhammer symbol at [" +
                        kappa.toString() + "]");
      den *= pb;
    }
    RationalFunction c = jackCAt(spec.alpha, kappa, spec.argument);
    if (c.isZero()) continue;
    total += num / den * c;
  }
  return total;
}

HypergeomResult ghypergeom(const HypergeomSpec& spec) {
  checkAlpha(spec.alpha);
  HypergeomResult r;
  std::size_t p = spec.upper.size(), q = spec.lower.size();
  r.radiusFlag = p == q + 1;
  auto term = terminationDegree(spec);
  bool numeric =
      spec.argument.isNumeric() && spec.alpha.isConstant() && allConstant(spec.upper) && allConstant(spec.lower);
  r.numeric = numeric;

  int last;
  bool useTolerance = false;
  if (term) {
    last = spec.limit ? std::min(*spec.limit, *term) : *term;
    r.terminated = !spec.limit || *spec.limit >= *term;
  } else if (spec.limit) {
    last = *spec.limit;
  } else {
    if (p >= q + 2) throw DomainError("non-terminating pFq with p >= q+2 needs an explicit truncation degree");
    if (!spec.tolerance) throw DomainError("non-terminating series needs a truncation degree or a tolerance");
    if (!numeric) throw DomainError("tolerance mode needs numeric parameters and argument");
    if (!(*spec.tolerance > 0)) throw DomainError("tolerance must be positive");
    useTolerance = true;
    last = spec.degreeCap;
  }
  if (last < 0) throw DomainError("truncation degree must be nonnegative");

  // Numeric sums are accumulated exactly too; only the stopping test uses doubles.
  RationalFunction sum;
  for (int k = 0; k <= last; ++k) {
    RationalFunction layer = hypergeomLayer(spec, k);
    sum += layer;
    r.degree = k;
    if (useTolerance && k > 0) {
      double s = std::abs(sum.toDouble());
      double l = std::abs(layer.toDouble());
      if (l <= *spec.tolerance * s || (s == 0 && l == 0)) {
        r.exact = sum;
        r.value = sum.toDouble();
        return r;
      }
    }
  }
  r.exact = sum;
  if (sum.isConstant()) {
    r.numeric = true;
    r.value = sum.toDouble();
  }
  if (useTolerance)
    throw ConvergenceError("hypergeometric series did not reach tolerance by degree " + std::to_string(last),
                           r.value);
  return r;
}

// ---------------------------------------------------------------------------

double GaussianPolyForm::operator()(double x) const {
  mpq_class v = horner(poly, mpq_class(x));
  return constant.get_d() * std::sqrt(root.get_d() / M_PI) * std::exp(-expCoefficient.get_d() * x * x) * v.get_d();
}

GaussianPolyForm GaussianPolyForm::canonical() const {
  GaussianPolyForm out = *this;
  // sqrt(a/b) = sqrt(a b) / b
  mpz_class r = root.get_num() * root.get_den();
  out.constant /= mpq_class(root.get_den());
  mpz_class squarePart = 1;
  for (mpz_class f = 2; f * f <= r; ++f)
    while (r % (f * f) == 0) {
      r /= f * f;
      squarePart *= f;
    }
  out.constant *= mpq_class(squarePart);
  out.root = mpq_class(r);
  return out;
}

SmallestEigForm smallestEigForm(const RationalFunction& alpha, int p, int m) {
  checkAlpha(alpha);
  if (p < 1) throw DomainError("smallest-eigenvalue density needs a positive integer p");
  if (m < 1) throw DomainError("m must be positive");
  SmallestEigForm f;
  f.alpha = alpha;
  f.p = p;
  f.m = m;
  HypergeomSpec spec;
  spec.alpha = alpha;
  spec.upper = {RationalFunction(-p), RationalFunction(m) / alpha + RationalFunction(1)};
  spec.argument = HypergeomArgument::scalarIdentity(RationalFunction(-2), m - 1);
  int top = *terminationDegree(spec);
  // 2F0(-2/x I) = sum_k layer_k x^{-k}
  for (int k = 0; k <= top; ++k) f.f20Layers.push_back(hypergeomLayer(spec, k));
  f.poly.assign(p * m + 1, RationalFunction());
  for (int k = 0; k <= top; ++k) f.poly[p * m - k] = f.f20Layers[k];
  return f;
}

namespace {

std::vector<mpq_class> numericPoly(const std::vector<RationalFunction>& poly) {
  std::vector<mpq_class> out;
  for (const auto& c : poly) {
    if (!c.isConstant()) throw DomainError("numeric evaluation needs a numeric alpha");
    out.push_back(c.constantValue());
  }
  return out;
}

double evalSmallest(const std::vector<mpq_class>& poly, int m, double x) {
  if (x <= 0) return 0;
  return std::exp(-0.5 * m * x) * horner(poly, mpq_class(x)).get_d();
}

}  // namespace

double smallestEigDensity(const RationalFunction& alpha, int p, int m, double x) {
  SmallestEigForm f = smallestEigForm(alpha, p, m);
  return evalSmallest(numericPoly(f.poly), m, x);
}

double NormalizedDensity::operator()(double x) const {
  return evalSmallest(numericPoly(form.poly), form.m, x) / mass;
}

NormalizedDensity normalizedSmallestEigDensity(const RationalFunction& alpha, int p, int m) {
  NormalizedDensity d;
  d.form = smallestEigForm(alpha, p, m);
  std::vector<mpq_class> poly = numericPoly(d.form.poly);
  double rate = 0.5 * m;
  // Tail of x^j e^{-rate x} beyond X is Gamma(j+1, rate X) / rate^{j+1}.
  auto tail = [&](double X) {
    double t = 0;
    for (std::size_t j = 0; j < poly.size(); ++j)
      if (poly[j] != 0)
        t += std::abs(poly[j].get_d()) * boost::math::tgamma(static_cast<double>(j + 1), rate * X) /
             std::pow(rate, static_cast<double>(j + 1));
    return t;
  };
  double full = tail(0);
  double X = 1;
  while (tail(X) > 1e-12 * full) X *= 1.5;
  auto f = [&](double x) { return evalSmallest(poly, m, x); };
  double err = 0;
  d.mass = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, X, 15, 1e-12, &err);
  d.cutoff = X;
  return d;
}

CdfResult largestEigCDF(const RationalFunction& alpha, const RationalFunction& gamma, int m, double x, double tol) {
  checkAlpha(alpha);
  if (!alpha.isConstant() || !gamma.isConstant()) throw DomainError("largestEigCDF needs numeric alpha and gamma");
  if (alpha.constantValue() <= 0) throw DomainError("alpha must be positive");
  if (gamma.constantValue() <= -1) throw DomainError("gamma must exceed -1");
  if (m < 1) throw DomainError("m must be positive");
  if (x < 0) throw DomainError("x must be nonnegative");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  CdfResult out;
  if (x == 0) return out;
  RationalFunction mm(m - 1);
  RationalFunction a = gamma + mm / alpha + RationalFunction(1);
  RationalFunction b = gamma + RationalFunction(2) * mm / alpha + RationalFunction(2);
  double ad = alpha.toDouble();
  double logPre = logMvGamma(ad, mm.toDouble() / ad + 1, m) - logMvGamma(ad, b.toDouble(), m) +
                  m * a.toDouble() * std::log(x / 2);
  HypergeomSpec spec;
  spec.alpha = alpha;
  spec.upper = {a};
  spec.lower = {b};
  spec.argument = HypergeomArgument::scalarIdentity(RationalFunction(mpq_class(-x / 2)), m);
  spec.tolerance = tol;
  HypergeomResult h;
  try {
    h = ghypergeom(spec);
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(e.what(), std::exp(logPre) * e.partialValue());
  }
  out.raw = std::exp(logPre) * h.value;
  out.degree = h.degree;
  out.value = std::clamp(out.raw, 0.0, 1.0);
  out.clamped = out.value != out.raw;
  return out;
}

GaussianPolyForm levelDensityForm(int beta, int n, bool scaled) {
  if (beta <= 0 || beta % 2) throw DomainError("level density needs beta = 2/alpha a positive even integer");
  if (n < 1) throw DomainError("n must be positive");
  RationalFunction alpha = RationalFunction::fraction(2, beta);
  int invAlpha = beta / 2;
  Partition kappa(std::vector<int>(n - 1, beta));
  int k = kappa.weight();
  OrthoExpansion h = hermite(alpha, kappa, VarCount::numeric(n));
  RationalFunction nn(n);
  // q(x) = (-1)^{k/2} H(i x I_n) / C_kappa(I_n); only even powers occur.
  std::vector<mpq_class> q(k + 1);
  for (const auto& [s, c] : h.coeffs) {
    int w = s.weight();
    q[w] += (c * jackIdentityValue(alpha, s, Normalization::C, nn)).constantValue();
  }
  mpq_class ck = jackIdentityValue(alpha, kappa, Normalization::C, nn).constantValue();
  for (int w = 0; w <= k; ++w) {
    if (q[w] == 0) continue;
    if (w % 2) throw ConsistencyError("odd power in an even Hermite polynomial");
    q[w] /= ck;
    if (((k + w) / 2) % 2) q[w] = -q[w];
  }
  GaussianPolyForm f;
  // Gamma(1 + 1/alpha) / Gamma(1 + n/alpha), both integer arguments
  f.constant = factorial(invAlpha) / factorial(n * invAlpha);
  if (!scaled) {
    f.root = mpq_class(1, 2);
    f.expCoefficient = mpq_class(1, 2);
    f.poly = q;
    return f;
  }
  // s rho(s x) with s^2 = 2 n beta
  mpq_class s2(2 * n * beta);
  f.root = mpq_class(n * beta);
  f.expCoefficient = s2 / 2;
  f.poly.assign(k + 1, 0);
  mpq_class pw = 1;
  for (int w = 0; w <= k; w += 2) {
    f.poly[w] = q[w] * pw;
    pw *= s2;
  }
  return f;
}

namespace {

const GaussianPolyForm& cachedLevelForm(int beta, int n, bool scaled) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, bool>, GaussianPolyForm> forms;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(beta, n, scaled);
  auto it = forms.find(key);
  if (it == forms.end()) it = forms.emplace(key, levelDensityForm(beta, n, scaled)).first;
  return it->second;
}

}  // namespace

double levelDensity(int beta, int n, double x) { return cachedLevelForm(beta, n, false)(x); }

double scaledLevelDensity(int beta, int n, double x) { return cachedLevelForm(beta, n, true)(x); }

}  // namespace mops
