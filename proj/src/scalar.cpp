#include "mops/scalar.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <tuple>

#include "mops/errors.hpp"

namespace mops {

namespace {

constexpr int kFieldBits = 10;
constexpr std::uint64_t kFieldMask = (1ULL << kFieldBits) - 1;
constexpr std::uint64_t kCarryMask = (1ULL << 10) | (1ULL << 20) | (1ULL << 30) | (1ULL << 40) |
                                     (1ULL << 50) | (1ULL << 60);

inline int offset(int p) { return (kNumParams - 1 - p) * kFieldBits; }
inline int offset(Param p) { return offset(static_cast<int>(p)); }

inline int expOf(std::uint64_t mono, int p) {
  return static_cast<int>((mono >> offset(p)) & kFieldMask);
}

inline std::uint64_t monoMul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  if ((a ^ b ^ s) & kCarryMask) throw DomainError("polynomial degree overflow (max 1023 per parameter)");
  return s;
}

inline bool monoDivides(std::uint64_t d, std::uint64_t m) {
  std::uint64_t q = m - d;
  return ((m ^ d ^ q) & kCarryMask) == 0;
}

std::uint64_t pack(const Exponents& e) {
  std::uint64_t m = 0;
  for (int p = 0; p < kNumParams; ++p) {
    if (e[p] < 0 || static_cast<std::uint64_t>(e[p]) > kFieldMask)
      throw DomainError("exponent out of range");
    m |= static_cast<std::uint64_t>(e[p]) << offset(p);
  }
  return m;
}

using Terms = std::vector<Polynomial::Term>;

// r = a + sign*b for sorted term lists.
Terms mergeAdd(const Terms& a, const Terms& b, bool subtract) {
  Terms r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].mono > b[j].mono) {
      r.push_back(a[i++]);
    } else if (a[i].mono < b[j].mono) {
      r.push_back({b[j].mono, subtract ? mpz_class(-b[j].coef) : b[j].coef});
      ++j;
    } else {
      mpz_class c = subtract ? mpz_class(a[i].coef - b[j].coef) : mpz_class(a[i].coef + b[j].coef);
      if (c != 0) r.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.push_back({b[j].mono, subtract ? mpz_class(-b[j].coef) : b[j].coef});
  return r;
}

// a - c*x^shift*b, where the leading terms are known to cancel.
Terms subtractScaledShifted(const Terms& a, const Terms& b, const mpz_class& c, std::uint64_t shift) {
  Terms r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  mpz_class tmp;
  while (i < a.size() && j < b.size()) {
    std::uint64_t bm = b[j].mono + shift;
    if (a[i].mono > bm) {
      r.push_back(a[i++]);
    } else if (a[i].mono < bm) {
      tmp = -c * b[j].coef;
      r.push_back({bm, tmp});
      ++j;
    } else {
      tmp = a[i].coef;
      mpz_submul(tmp.get_mpz_t(), c.get_mpz_t(), b[j].coef.get_mpz_t());
      if (tmp != 0) r.push_back({bm, tmp});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) {
    tmp = -c * b[j].coef;
    r.push_back({b[j].mono + shift, tmp});
  }
  return r;
}

}  // namespace

std::string_view paramName(Param p) {
  switch (p) {
    case Param::Alpha: return "a";
    case Param::N: return "n";
    case Param::Gamma: return "g";
    case Param::G1: return "g1";
    case Param::G2: return "g2";
    case Param::R: return "r";
  }
  return "?";
}

std::optional<Param> paramFromName(std::string_view name) {
  for (int p = 0; p < kNumParams; ++p)
    if (paramName(static_cast<Param>(p)) == name) return static_cast<Param>(p);
  return std::nullopt;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.push_back({0, mpz_class(c)});
}

Polynomial::Polynomial(const mpz_class& c) {
  if (c != 0) terms_.push_back({0, c});
}

Polynomial Polynomial::variable(Param p, int power) {
  Exponents e{};
  e[static_cast<int>(p)] = power;
  return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Exponents& e, const mpz_class& c) {
  Polynomial r;
  if (c != 0) r.terms_.push_back({pack(e), c});
  return r;
}

Polynomial Polynomial::fromTerms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  Polynomial r;
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coef += t.coef;
    } else {
      if (!r.terms_.empty() && r.terms_.back().coef == 0) r.terms_.pop_back();
      r.terms_.push_back(std::move(t));
    }
  }
  if (!r.terms_.empty() && r.terms_.back().coef == 0) r.terms_.pop_back();
  return r;
}

bool Polynomial::isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == 0); }

bool Polynomial::isOne() const { return terms_.size() == 1 && terms_[0].mono == 0 && terms_[0].coef == 1; }

mpz_class Polynomial::constantValue() const {
  if (!isConstant()) throw DomainError("polynomial is not constant");
  return terms_.empty() ? mpz_class(0) : terms_[0].coef;
}

int Polynomial::degree(Param p) const {
  int d = 0;
  int off = offset(p);
  for (const auto& t : terms_) d = std::max(d, static_cast<int>((t.mono >> off) & kFieldMask));
  return d;
}

mpz_class Polynomial::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::vector<Polynomial> Polynomial::coefficientsIn(Param p) const {
  std::vector<Polynomial> out(degree(p) + 1);
  int off = offset(p);
  for (const auto& t : terms_) {
    int e = static_cast<int>((t.mono >> off) & kFieldMask);
    out[e].terms_.push_back({t.mono - (static_cast<std::uint64_t>(e) << off), t.coef});
  }
  return out;
}

Polynomial Polynomial::coefficientIn(Param p, int power) const {
  Polynomial r;
  int off = offset(p);
  for (const auto& t : terms_) {
    int e = static_cast<int>((t.mono >> off) & kFieldMask);
    if (e == power) r.terms_.push_back({t.mono - (static_cast<std::uint64_t>(e) << off), t.coef});
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (o.isZero()) return *this;
  if (isZero()) return o;
  Polynomial r;
  r.terms_ = mergeAdd(terms_, o.terms_, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (o.isZero()) return *this;
  Polynomial r;
  r.terms_ = mergeAdd(terms_, o.terms_, true);
  return r;
}

Polynomial Polynomial::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::shifted(Param p, int power) const {
  Exponents e{};
  e[static_cast<int>(p)] = power;
  std::uint64_t s = pack(e);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.mono = monoMul(t.mono, s);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (isZero() || o.isZero()) return {};
  const Polynomial& small = size() <= o.size() ? *this : o;
  const Polynomial& big = size() <= o.size() ? o : *this;
  Polynomial r;
  if (small.size() == 1) {
    const Term& s = small.terms_[0];
    r.terms_.reserve(big.size());
    for (const auto& t : big.terms_) r.terms_.push_back({monoMul(s.mono, t.mono), s.coef * t.coef});
    return r;
  }
  std::vector<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>> idx;
  idx.reserve(small.size() * big.size());
  for (std::uint32_t i = 0; i < small.size(); ++i)
    for (std::uint32_t j = 0; j < big.size(); ++j)
      idx.emplace_back(monoMul(small.terms_[i].mono, big.terms_[j].mono), i, j);
  std::sort(idx.begin(), idx.end(),
            [](const auto& a, const auto& b) { return std::get<0>(a) > std::get<0>(b); });
  mpz_class acc;
  std::size_t k = 0;
  while (k < idx.size()) {
    std::uint64_t m = std::get<0>(idx[k]);
    acc = 0;
    for (; k < idx.size() && std::get<0>(idx[k]) == m; ++k)
      mpz_addmul(acc.get_mpz_t(), small.terms_[std::get<1>(idx[k])].coef.get_mpz_t(),
                 big.terms_[std::get<2>(idx[k])].coef.get_mpz_t());
    if (acc != 0) r.terms_.push_back({m, acc});
  }
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

Polynomial Polynomial::divScalarExact(const mpz_class& c) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
  return r;
}

std::optional<Polynomial> Polynomial::divideExact(const Polynomial& d) const {
  if (d.isZero()) throw DomainError("division by the zero polynomial");
  if (isZero()) return Polynomial();
  if (d.isConstant()) {
    const mpz_class& c = d.terms_[0].coef;
    for (const auto& t : terms_)
      if (!mpz_divisible_p(t.coef.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
    return divScalarExact(c);
  }
  for (int p = 0; p < kNumParams; ++p)
    if (degree(static_cast<Param>(p)) < d.degree(static_cast<Param>(p))) return std::nullopt;
  const Term& ld = d.terms_[0];
  Terms rem = terms_;
  Terms quot;
  mpz_class qc;
  while (!rem.empty()) {
    const Term& lr = rem[0];
    if (!monoDivides(ld.mono, lr.mono)) return std::nullopt;
    if (!mpz_divisible_p(lr.coef.get_mpz_t(), ld.coef.get_mpz_t())) return std::nullopt;
    std::uint64_t shift = lr.mono - ld.mono;
    mpz_divexact(qc.get_mpz_t(), lr.coef.get_mpz_t(), ld.coef.get_mpz_t());
    quot.push_back({shift, qc});
    rem = subtractScaledShifted(rem, d.terms_, qc, shift);
  }
  Polynomial q;
  q.terms_ = std::move(quot);
  return q;
}

Polynomial Polynomial::divExact(const Polynomial& d) const {
  auto q = divideExact(d);
  if (!q) throw ConsistencyError("inexact polynomial division");
  return *q;
}

std::pair<Polynomial, mpz_class> Polynomial::substitute(const Bindings& b) const {
  if (b.empty() || isZero()) return {*this, mpz_class(1)};
  struct Sub {
    int p;
    int deg;
    std::vector<mpz_class> numPow, denPow;
  };
  std::vector<Sub> subs;
  mpz_class denom = 1;
  for (const auto& [param, value] : b) {
    int p = static_cast<int>(param);
    int deg = degree(param);
    if (deg == 0) continue;
    Sub s{p, deg, {}, {}};
    s.numPow.resize(deg + 1);
    s.denPow.resize(deg + 1);
    s.numPow[0] = 1;
    s.denPow[0] = 1;
    for (int e = 1; e <= deg; ++e) {
      s.numPow[e] = s.numPow[e - 1] * value.get_num();
      s.denPow[e] = s.denPow[e - 1] * value.get_den();
    }
    denom *= s.denPow[deg];
    subs.push_back(std::move(s));
  }
  if (subs.empty()) return {*this, mpz_class(1)};
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::uint64_t m = t.mono;
    mpz_class c = t.coef;
    for (const auto& s : subs) {
      int e = expOf(m, s.p);
      c *= s.numPow[e];
      c *= s.denPow[s.deg - e];
      m -= static_cast<std::uint64_t>(e) << offset(s.p);
    }
    out.push_back({m, std::move(c)});
  }
  return {fromTerms(std::move(out)), denom};
}

std::string Polynomial::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const mpz_class& c = it->coef;
    bool neg = c < 0;
    if (neg) os << '-';
    else if (!first) os << '+';
    first = false;
    mpz_class ac = abs(c);
    bool wroteCoef = false;
    if (ac != 1 || it->mono == 0) {
      os << ac.get_str();
      wroteCoef = true;
    }
    for (int p = 0; p < kNumParams; ++p) {
      int e = expOf(it->mono, p);
      if (e == 0) continue;
      if (wroteCoef) os << '*';
      os << paramName(static_cast<Param>(p));
      if (e > 1) os << '^' << e;
      wroteCoef = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- gcd

namespace {

Polynomial positive(Polynomial p) {
  if (!p.isZero() && p.leadingCoefficient() < 0) return -p;
  return p;
}

unsigned presentMask(const Polynomial& a) {
  unsigned mask = 0;
  for (const auto& t : a.terms())
    for (int p = 0; p < kNumParams; ++p)
      if (expOf(t.mono, p)) mask |= 1u << p;
  return mask;
}

Polynomial monomialGcd(const Polynomial& single, const Polynomial& other) {
  const auto& t = single.terms()[0];
  mpz_class c = abs(t.coef);
  mpz_class oc = other.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), oc.get_mpz_t());
  Exponents e{};
  for (int p = 0; p < kNumParams; ++p) {
    int m = expOf(t.mono, p);
    for (const auto& u : other.terms()) {
      if (m == 0) break;
      m = std::min(m, expOf(u.mono, p));
    }
    e[p] = m;
  }
  return Polynomial::monomial(e, c);
}

Polynomial contentIn(const Polynomial& a, Param v) {
  auto coeffs = a.coefficientsIn(v);
  std::vector<const Polynomial*> nz;
  for (const auto& c : coeffs)
    if (!c.isZero()) nz.push_back(&c);
  std::sort(nz.begin(), nz.end(), [](const Polynomial* x, const Polynomial* y) { return x->size() < y->size(); });
  Polynomial g = positive(*nz[0]);
  for (std::size_t i = 1; i < nz.size() && !g.isOne(); ++i) g = gcd(g, *nz[i]);
  return g;
}

// Modular image: coefficients in v of a with all other parameters evaluated.
constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}
inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}
inline std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

std::vector<std::uint64_t> image(const Polynomial& a, int v, const std::array<std::uint64_t, kNumParams>& pt) {
  std::vector<std::uint64_t> out(a.degree(static_cast<Param>(v)) + 1, 0);
  for (const auto& t : a.terms()) {
    std::uint64_t c = mpz_fdiv_ui(t.coef.get_mpz_t(), kPrime);
    for (int p = 0; p < kNumParams; ++p) {
      if (p == v) continue;
      int e = expOf(t.mono, p);
      if (e) c = mulmod(c, powmod(pt[p], e));
    }
    int ev = expOf(t.mono, v);
    out[ev] = addmod(out[ev], c);
  }
  return out;
}

void trim(std::vector<std::uint64_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Degree of the univariate gcd modulo the prime.
int imageGcdDegree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    std::uint64_t inv = invmod(b.back());
    while (a.size() >= b.size()) {
      std::uint64_t f = mulmod(a.back(), inv);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = submod(a[i + shift], mulmod(f, b[i]));
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

Polynomial prem(const Polynomial& a, const Polynomial& b, Param v) {
  int db = b.degree(v);
  Polynomial lcb = b.coefficientIn(v, db);
  Polynomial r = a;
  while (!r.isZero()) {
    int dr = r.degree(v);
    if (dr < db) break;
    Polynomial lcr = r.coefficientIn(v, dr);
    Polynomial f = lcb, g = lcr;
    if (lcb.isConstant() && lcr.isConstant()) {
      mpz_class x = gcd(lcb.constantValue(), lcr.constantValue());
      f = Polynomial(mpz_class(lcb.constantValue() / x));
      g = Polynomial(mpz_class(lcr.constantValue() / x));
    }
    r = r * f - (b * g).shifted(v, dr - db);
  }
  return r;
}

Polynomial primitiveGcd(Polynomial a, Polynomial b, Param v) {
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  int vi = static_cast<int>(v);
  static thread_local std::mt19937_64 rng(12345);
  Polynomial lca = a.coefficientIn(v, a.degree(v));
  Polynomial lcb = b.coefficientIn(v, b.degree(v));
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::array<std::uint64_t, kNumParams> pt{};
    for (auto& x : pt) x = rng() % kPrime;
    auto ia = image(a, vi, pt);
    auto ib = image(b, vi, pt);
    if (ia.back() == 0 || ib.back() == 0) continue;
    int d = imageGcdDegree(ia, ib);
    if (d == 0) return Polynomial(1);
    if (d == b.degree(v)) {
      if (a.divideExact(b)) return positive(b);
    }
    break;
  }
  while (true) {
    Polynomial r = prem(a, b, v);
    if (r.isZero()) return positive(b);
    if (r.degree(v) == 0) return Polynomial(1);
    a = std::move(b);
    b = positive(r.divExact(contentIn(r, v)));
  }
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.isZero()) return positive(b);
  if (b.isZero()) return positive(a);
  if (a.isConstant() || b.isConstant()) {
    mpz_class g;
    mpz_class ca = a.content(), cb = b.content();
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return Polynomial(g);
  }
  if (a.size() == 1) return monomialGcd(a, b);
  if (b.size() == 1) return monomialGcd(b, a);
  if (a == b || a == -b) return positive(a);
  unsigned ma = presentMask(a), mb = presentMask(b);
  int vi = 0;
  while (!(((ma | mb) >> vi) & 1u)) ++vi;
  Param v = static_cast<Param>(vi);
  if (!((ma >> vi) & 1u)) return gcd(a, contentIn(b, v));
  if (!((mb >> vi) & 1u)) return gcd(contentIn(a, v), b);
  Polynomial ca = contentIn(a, v), cb = contentIn(b, v);
  Polynomial pa = ca.isOne() ? a : a.divExact(ca);
  Polynomial pb = cb.isOne() ? b : b.divExact(cb);
  Polynomial c = gcd(ca, cb);
  Polynomial g = primitiveGcd(pa, pb, v);
  return positive(c * g);
}

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const mpq_class& q) : num_(q.get_num()), den_(q.get_den()) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.isZero()) throw DomainError("division by the zero function");
  if (num.isZero()) {
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = gcd(num, den);
  if (g.isOne()) {
    num_ = num;
    den_ = den;
  } else {
    num_ = num.divExact(g);
    den_ = den.divExact(g);
  }
  normalizeSign();
}

RationalFunction RationalFunction::fraction(long num, long den) { return RationalFunction(mpq_class(num, den)) ; }

RationalFunction RationalFunction::fromCoprime(Polynomial num, Polynomial den) {
  RationalFunction r;
  if (num.isZero()) return r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.normalizeSign();
  return r;
}

void RationalFunction::normalizeSign() {
  if (den_.leadingCoefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

std::vector<Param> RationalFunction::freeParams() const {
  std::vector<Param> out;
  for (int p = 0; p < kNumParams; ++p)
    if (dependsOn(static_cast<Param>(p))) out.push_back(static_cast<Param>(p));
  return out;
}

mpq_class RationalFunction::constantValue() const {
  if (!isConstant()) throw DomainError("value still depends on parameters: " + toString());
  mpq_class q(num_.constantValue(), den_.constantValue());
  q.canonicalize();
  return q;
}

double RationalFunction::toDouble() const { return constantValue().get_d(); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (isZero()) return o;
  if (o.isZero()) return *this;
  if (isConstant() && o.isConstant()) return RationalFunction(mpq_class(constantValue() + o.constantValue()));
  if (den_ == o.den_) {
    Polynomial t = num_ + o.num_;
    if (t.isZero()) return {};
    if (den_.isOne()) return fromCoprime(std::move(t), den_);
    Polynomial h = gcd(t, den_);
    if (h.isOne()) return fromCoprime(std::move(t), den_);
    return fromCoprime(t.divExact(h), den_.divExact(h));
  }
  Polynomial g = gcd(den_, o.den_);
  if (g.isOne()) return fromCoprime(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  Polynomial b1 = den_.divExact(g), d1 = o.den_.divExact(g);
  Polynomial t = num_ * d1 + o.num_ * b1;
  if (t.isZero()) return {};
  Polynomial h = gcd(t, g);
  if (h.isOne()) return fromCoprime(std::move(t), b1 * o.den_);
  return fromCoprime(t.divExact(h), b1 * o.den_.divExact(h));
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (isZero() || o.isZero()) return {};
  if (isConstant() && o.isConstant()) return RationalFunction(mpq_class(constantValue() * o.constantValue()));
  Polynomial g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  Polynomial a = g1.isOne() ? num_ : num_.divExact(g1);
  Polynomial d = g1.isOne() ? o.den_ : o.den_.divExact(g1);
  Polynomial c = g2.isOne() ? o.num_ : o.num_.divExact(g2);
  Polynomial b = g2.isOne() ? den_ : den_.divExact(g2);
  return fromCoprime(a * c, b * d);
}

RationalFunction RationalFunction::inverse() const {
  if (isZero()) throw DomainError("division by the zero function");
  return fromCoprime(den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inverse(); }

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return fromCoprime(num_.pow(e), den_.pow(e));
}

RationalFunction RationalFunction::substitute(const Bindings& b) const {
  auto [n, dn] = num_.substitute(b);
  auto [d, dd] = den_.substitute(b);
  if (d.isZero()) {
    std::ostringstream os;
    os << "pole at";
    for (const auto& [p, v] : b) os << ' ' << paramName(p) << '=' << v.get_str();
    os << " in " << toString();
    throw PoleError(os.str());
  }
  return RationalFunction(n.scaled(dd), d.scaled(dn));
}

std::vector<RationalFunction> RationalFunction::seriesCoefficients(Param p, int degree) const {
  auto ncoef = num_.coefficientsIn(p);
  auto dcoef = den_.coefficientsIn(p);
  if (dcoef[0].isZero())
    throw PoleError(std::string("denominator vanishes at ") + std::string(paramName(p)) + "=0");
  RationalFunction d0(dcoef[0]);
  std::vector<RationalFunction> out;
  for (int i = 0; i <= degree; ++i) {
    RationalFunction acc = i < static_cast<int>(ncoef.size()) ? RationalFunction(ncoef[i]) : RationalFunction();
    for (int j = 1; j <= i && j < static_cast<int>(dcoef.size()); ++j)
      acc -= RationalFunction(dcoef[j]) * out[i - j];
    out.push_back(acc / d0);
  }
  return out;
}

LimitResult RationalFunction::limitAtInfinity(Param p) const {
  if (isZero()) return {LimitResult::Kind::Finite, {}};
  int dn = num_.degree(p), dd = den_.degree(p);
  if (dn < dd) return {LimitResult::Kind::Finite, {}};
  RationalFunction lead(num_.coefficientIn(p, dn), den_.coefficientIn(p, dd));
  if (dn == dd) return {LimitResult::Kind::Finite, lead};
  if (!lead.isConstant()) return {LimitResult::Kind::Infinity, lead};
  return {lead.constantValue() > 0 ? LimitResult::Kind::PlusInfinity : LimitResult::Kind::MinusInfinity, lead};
}

std::string RationalFunction::toString() const {
  if (den_.isOne()) return num_.toString();
  std::string n = num_.toString();
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.toString();
  bool atom = den_.size() == 1 && (den_.isConstant() || den_.leadingCoefficient() == 1) &&
              d.find('*') == std::string::npos;
  if (!atom) d = "(" + d + ")";
  return n + "/" + d;
}

RationalFunction operator+(long a, const RationalFunction& b) { return RationalFunction(a) + b; }
RationalFunction operator-(long a, const RationalFunction& b) { return RationalFunction(a) - b; }
RationalFunction operator*(long a, const RationalFunction& b) { return RationalFunction(a) * b; }
RationalFunction operator/(long a, const RationalFunction& b) { return RationalFunction(a) / b; }

namespace {
int comparePoly(const Polynomial& a, const Polynomial& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a.terms()[i];
    const auto& y = b.terms()[i];
    if (x.mono != y.mono) return x.mono < y.mono ? -1 : 1;
    int c = cmp(x.coef, y.coef);
    if (c) return c < 0 ? -1 : 1;
  }
  return 0;
}
}  // namespace

bool RationalFunctionLess::operator()(const RationalFunction& a, const RationalFunction& b) const {
  int c = comparePoly(a.numerator(), b.numerator());
  if (c) return c < 0;
  return comparePoly(a.denominator(), b.denominator()) < 0;
}

}  // namespace mops
