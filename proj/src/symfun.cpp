#include "mops/symfun.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "mops/cache.hpp"
#include "mops/errors.hpp"
#include "mops/jack.hpp"

namespace mops {

std::string_view basisLetter(Basis b) {
  switch (b) {
    case Basis::Monomial: return "m";
    case Basis::PowerSum: return "p";
    case Basis::JackC: return "C";
    case Basis::JackJ: return "J";
    case Basis::JackP: return "P";
  }
  return "?";
}

std::string_view basisName(Basis b) {
  switch (b) {
    case Basis::Monomial: return "monomial";
    case Basis::PowerSum: return "powerSum";
    case Basis::JackC: return "jackC";
    case Basis::JackJ: return "jackJ";
    case Basis::JackP: return "jackP";
  }
  return "?";
}

bool isJackBasis(Basis b) { return b == Basis::JackC || b == Basis::JackJ || b == Basis::JackP; }

// ---------------------------------------------------------------- VarCount

VarCount VarCount::numeric(int n) {
  if (n < 0) throw DomainError("number of variables must be non-negative");
  return VarCount(n);
}

int VarCount::value() const {
  if (isGeneric()) throw UnsupportedModeError("operation needs a numeric number of variables");
  return n_;
}

RationalFunction VarCount::asScalar() const {
  return isGeneric() ? RationalFunction::param(Param::N) : RationalFunction(n_);
}

std::string VarCount::toString() const { return isGeneric() ? "generic" : std::to_string(n_); }

// ---------------------------------------------------------------- SymExpr

void SymExpr::add(const Partition& p, const RationalFunction& c) {
  if (c.isZero() || !vars_.admits(p)) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

void SymExpr::addScaled(const SymExpr& other, const RationalFunction& c) {
  if (c.isZero()) return;
  for (const auto& [p, v] : other.terms_) add(p, c.isOne() ? v : v * c);
}

RationalFunction SymExpr::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? RationalFunction() : it->second;
}

SymExpr SymExpr::scaled(const RationalFunction& c) const {
  SymExpr r(basis_, vars_);
  r.addScaled(*this, c);
  return r;
}

SymExpr SymExpr::withVars(VarCount vars) const {
  SymExpr r(basis_, vars);
  for (const auto& [p, v] : terms_) r.add(p, v);
  return r;
}

SymExpr SymExpr::operator+(const SymExpr& o) const {
  if (o.basis_ != basis_) throw DomainError("cannot add expressions in different bases");
  SymExpr r = *this;
  r.addScaled(o, RationalFunction(1));
  return r;
}

SymExpr SymExpr::operator-(const SymExpr& o) const {
  if (o.basis_ != basis_) throw DomainError("cannot subtract expressions in different bases");
  SymExpr r = *this;
  r.addScaled(o, RationalFunction(-1));
  return r;
}

std::string SymExpr::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [part, coef] : terms_) {
    bool neg = coef.displayNegative();
    RationalFunction c = neg ? -coef : coef;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    std::string elem = std::string(basisLetter(basis_)) + "[" + part.toString() + "]";
    if (part.empty()) {
      std::string s = c.toString();
      if (neg && c.isPolynomial() && c.numerator().size() > 1) s = "(" + s + ")";
      os << s;
      continue;
    }
    if (c.isOne()) {
      os << elem;
      continue;
    }
    std::string s = c.toString();
    if (c.isPolynomial() && c.numerator().size() > 1) s = "(" + s + ")";
    os << s << "*" << elem;
  }
  return os.str();
}

// ---------------------------------------------------------------- ProductExpr

namespace {
using Node = ProductExpr::Node;
using NodePtr = ProductExpr::NodePtr;

NodePtr makeNode(Node n) { return std::make_shared<const Node>(std::move(n)); }

bool containsLeaf(const Node& n) {
  if (n.kind == ProductExpr::Kind::Leaf) return true;
  for (const auto& c : n.children)
    if (containsLeaf(*c)) return true;
  return false;
}

bool nodeHasProducts(const Node& n) {
  switch (n.kind) {
    case ProductExpr::Kind::Leaf:
    case ProductExpr::Kind::Scalar: return false;
    case ProductExpr::Kind::Power:
      if (n.exponent >= 2 && containsLeaf(*n.children[0])) return true;
      return nodeHasProducts(*n.children[0]);
    case ProductExpr::Kind::Product: {
      int withLeaves = 0;
      for (const auto& c : n.children) {
        if (containsLeaf(*c)) ++withLeaves;
        if (nodeHasProducts(*c)) return true;
      }
      return withLeaves >= 2;
    }
    case ProductExpr::Kind::Sum:
      for (const auto& c : n.children)
        if (nodeHasProducts(*c)) return true;
      return false;
  }
  return false;
}

void collectBases(const Node& n, std::set<Basis>& out) {
  if (n.kind == ProductExpr::Kind::Leaf) out.insert(n.basis);
  for (const auto& c : n.children) collectBases(*c, out);
}

std::optional<RationalFunction> scalarOf(const Node& n) {
  switch (n.kind) {
    case ProductExpr::Kind::Leaf: return std::nullopt;
    case ProductExpr::Kind::Scalar: return n.scalar;
    case ProductExpr::Kind::Power: {
      auto b = scalarOf(*n.children[0]);
      if (!b) return std::nullopt;
      return b->pow(static_cast<int>(n.exponent));
    }
    case ProductExpr::Kind::Product: {
      RationalFunction r(1);
      for (const auto& c : n.children) {
        auto v = scalarOf(*c);
        if (!v) return std::nullopt;
        r *= *v;
      }
      return r;
    }
    case ProductExpr::Kind::Sum: {
      RationalFunction r;
      for (const auto& c : n.children) {
        auto v = scalarOf(*c);
        if (!v) return std::nullopt;
        r += *v;
      }
      return r;
    }
  }
  return std::nullopt;
}
}  // namespace

ProductExpr ProductExpr::leaf(Basis b, Partition p, int position) {
  Node n{Kind::Leaf, {}, 1, b, std::move(p), RationalFunction(), position};
  return ProductExpr(makeNode(std::move(n)));
}

ProductExpr ProductExpr::scalarValue(RationalFunction c, int position) {
  Node n{Kind::Scalar, {}, 1, Basis::Monomial, Partition(), std::move(c), position};
  return ProductExpr(makeNode(std::move(n)));
}

ProductExpr ProductExpr::sum(std::vector<ProductExpr> terms) {
  Node n{Kind::Sum, {}, 1, Basis::Monomial, Partition(), RationalFunction(), 0};
  for (auto& t : terms) n.children.push_back(t.root_);
  return ProductExpr(makeNode(std::move(n)));
}

ProductExpr ProductExpr::product(std::vector<ProductExpr> factors) {
  Node n{Kind::Product, {}, 1, Basis::Monomial, Partition(), RationalFunction(), 0};
  for (auto& t : factors) n.children.push_back(t.root_);
  return ProductExpr(makeNode(std::move(n)));
}

ProductExpr ProductExpr::power(ProductExpr base, unsigned exponent) {
  Node n{Kind::Power, {base.root_}, exponent, Basis::Monomial, Partition(), RationalFunction(), 0};
  return ProductExpr(makeNode(std::move(n)));
}

ProductExpr ProductExpr::fromSymExpr(const SymExpr& e) {
  std::vector<ProductExpr> terms;
  for (const auto& [part, coef] : e.terms())
    terms.push_back(product({scalarValue(coef), leaf(e.basis(), part)}));
  return sum(std::move(terms));
}

bool ProductExpr::hasProducts() const { return nodeHasProducts(*root_); }

std::vector<Basis> ProductExpr::leafBases() const {
  std::set<Basis> s;
  collectBases(*root_, s);
  return {s.begin(), s.end()};
}

std::optional<RationalFunction> ProductExpr::scalarOnly() const { return scalarOf(*root_); }

ProductExpr m(Partition q) { return ProductExpr::leaf(Basis::Monomial, std::move(q)); }
ProductExpr p(Partition q) { return ProductExpr::leaf(Basis::PowerSum, std::move(q)); }
ProductExpr C(Partition q) { return ProductExpr::leaf(Basis::JackC, std::move(q)); }
ProductExpr J(Partition q) { return ProductExpr::leaf(Basis::JackJ, std::move(q)); }
ProductExpr P(Partition q) { return ProductExpr::leaf(Basis::JackP, std::move(q)); }
ProductExpr scalar(const RationalFunction& c) { return ProductExpr::scalarValue(c); }

// ---------------------------------------------------------------- evaluation

namespace {

using LeafFn = std::function<SymExpr(Basis, const Partition&)>;
using MulFn = std::function<SymExpr(const SymExpr&, const SymExpr&)>;

SymExpr evaluate(const Node& n, Basis target, VarCount vars, const LeafFn& leafFn, const MulFn& mulFn) {
  switch (n.kind) {
    case ProductExpr::Kind::Scalar: {
      SymExpr r(target, vars);
      r.add(Partition(), n.scalar);
      return r;
    }
    case ProductExpr::Kind::Leaf: return leafFn(n.basis, n.partition);
    case ProductExpr::Kind::Sum: {
      SymExpr r(target, vars);
      for (const auto& c : n.children) r.addScaled(evaluate(*c, target, vars, leafFn, mulFn), RationalFunction(1));
      return r;
    }
    case ProductExpr::Kind::Product: {
      // Scalars first so they scale rather than multiply.
      RationalFunction s(1);
      std::optional<SymExpr> acc;
      for (const auto& c : n.children) {
        if (auto v = scalarOf(*c)) {
          s *= *v;
          continue;
        }
        SymExpr x = evaluate(*c, target, vars, leafFn, mulFn);
        acc = acc ? mulFn(*acc, x) : x;
      }
      if (!acc) {
        SymExpr r(target, vars);
        r.add(Partition(), s);
        return r;
      }
      return acc->scaled(s);
    }
    case ProductExpr::Kind::Power: {
      if (auto v = scalarOf(n)) {
        SymExpr r(target, vars);
        r.add(Partition(), *v);
        return r;
      }
      SymExpr base = evaluate(*n.children[0], target, vars, leafFn, mulFn);
      SymExpr result(target, vars);
      result.add(Partition(), RationalFunction(1));
      unsigned e = n.exponent;
      while (e) {
        if (e & 1) result = mulFn(result, base);
        e >>= 1;
        if (e) base = mulFn(base, base);
      }
      return result;
    }
  }
  throw ConsistencyError("unknown expression node");
}

// Distinct rearrangements of lambda padded with zeros to length n.
std::vector<std::vector<int>> arrangements(const Partition& lambda, int n) {
  std::vector<int> v(n, 0);
  for (int i = 0; i < lambda.length(); ++i) v[i] = lambda[i];
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

TermMap computeMonomialProduct(const Partition& lambda, const Partition& mu, int n) {
  TermMap out;
  if (lambda.length() > n || mu.length() > n) return out;
  auto al = arrangements(lambda, n);
  // Count pairs (a, b) with a + b equal to a fixed non-increasing vector; fix b
  // by enumerating arrangements of mu and a by arrangements of lambda.
  auto am = arrangements(mu, n);
  std::map<std::vector<int>, long> counts;
  std::vector<int> s(n);
  for (const auto& a : al)
    for (const auto& b : am) {
      bool ok = true;
      for (int i = 0; i < n; ++i) {
        s[i] = a[i] + b[i];
        if (i > 0 && s[i] > s[i - 1]) {
          ok = false;
          break;
        }
      }
      if (ok) ++counts[s];
    }
  for (const auto& [vec, c] : counts) out.emplace(Partition::fromUnsorted(vec), RationalFunction(c));
  return out;
}

struct ProductKey {
  Partition lambda, mu;
  int n;
  auto operator<=>(const ProductKey&) const = default;
};

}  // namespace

const TermMap& monomialProduct(const Partition& lambda, const Partition& mu, VarCount vars) {
  static PersistentMemo<ProductKey, TermMap> cache;
  const Partition& a = lambda < mu ? lambda : mu;
  const Partition& b = lambda < mu ? mu : lambda;
  int n = vars.isGeneric() ? a.length() + b.length() : vars.value();
  if (!vars.isGeneric() && n > a.length() + b.length()) n = a.length() + b.length();
  return cache.getOrCompute(ProductKey{a, b, n}, [&] { return computeMonomialProduct(a, b, n); });
}

const TermMap& powerSumToMonomial(const Partition& lambda) {
  static PersistentMemo<Partition, TermMap> cache;
  return cache.getOrCompute(lambda, [&] {
    TermMap acc;
    acc.emplace(Partition(), RationalFunction(1));
    for (int part : lambda.parts()) {
      TermMap next;
      for (const auto& [q, c] : acc)
        for (const auto& [r, d] : monomialProduct(q, Partition{part}, VarCount::generic())) {
          auto it = next.find(r);
          if (it == next.end()) next.emplace(r, c * d);
          else it->second += c * d;
        }
      acc = std::move(next);
    }
    return acc;
  });
}

namespace {

SymExpr multiplyMonomial(const SymExpr& x, const SymExpr& y, VarCount vars) {
  SymExpr r(Basis::Monomial, vars);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      RationalFunction cab = ca * cb;
      if (a.empty()) {
        r.add(b, cab);
        continue;
      }
      if (b.empty()) {
        r.add(a, cab);
        continue;
      }
      for (const auto& [q, k] : monomialProduct(a, b, vars)) r.add(q, cab * k);
    }
  return r;
}

SymExpr multiplyPowerSum(const SymExpr& x, const SymExpr& y, VarCount vars) {
  SymExpr r(Basis::PowerSum, vars);
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      std::vector<int> parts = a.parts();
      parts.insert(parts.end(), b.parts().begin(), b.parts().end());
      r.add(Partition::fromUnsorted(parts), ca * cb);
    }
  return r;
}

SymExpr monomialLeaf(const Partition& q, VarCount vars) {
  SymExpr r(Basis::Monomial, vars);
  r.add(q, RationalFunction(1));
  return r;
}

SymExpr powerSumAsMonomial(const Partition& q, VarCount vars) {
  SymExpr r(Basis::Monomial, vars);
  for (const auto& [part, c] : powerSumToMonomial(q)) r.add(part, c);
  return r;
}

}  // namespace

SymExpr m2m(const ProductExpr& e, VarCount vars) {
  LeafFn leaf = [&](Basis b, const Partition& q) {
    if (b != Basis::Monomial) throw DomainError("m2m expects monomial leaves");
    return monomialLeaf(q, vars);
  };
  MulFn mul = [&](const SymExpr& x, const SymExpr& y) { return multiplyMonomial(x, y, vars); };
  return evaluate(e.root(), Basis::Monomial, vars, leaf, mul);
}

SymExpr p2m(const ProductExpr& e, VarCount vars) {
  LeafFn leaf = [&](Basis b, const Partition& q) {
    if (b != Basis::PowerSum) throw DomainError("p2m expects power-sum leaves");
    SymExpr r(Basis::PowerSum, VarCount::generic());
    r.add(q, RationalFunction(1));
    return r;
  };
  MulFn mul = [&](const SymExpr& x, const SymExpr& y) { return multiplyPowerSum(x, y, VarCount::generic()); };
  SymExpr ps = evaluate(e.root(), Basis::PowerSum, VarCount::generic(), leaf, mul);
  SymExpr r(Basis::Monomial, vars);
  for (const auto& [q, c] : ps.terms()) r.addScaled(powerSumAsMonomial(q, vars), c);
  return r;
}

SymExpr m2p(const ProductExpr& e) {
  SymExpr rem = m2m(e, VarCount::generic());
  SymExpr out(Basis::PowerSum, VarCount::generic());
  while (!rem.isZero()) {
    auto last = std::prev(rem.terms().end());
    Partition lambda = last->first;
    RationalFunction c = last->second;
    SymExpr pm = powerSumAsMonomial(lambda, VarCount::generic());
    RationalFunction f = c / pm.coefficient(lambda);
    out.add(lambda, f);
    rem.addScaled(pm, -f);
  }
  return out;
}

SymExpr m2jack(const RationalFunction& alpha, const SymExpr& e, VarCount vars) {
  if (e.basis() != Basis::Monomial) throw DomainError("m2jack expects a monomial-basis expression");
  SymExpr rem = e.withVars(vars);
  SymExpr out(Basis::JackC, vars);
  while (!rem.isZero()) {
    auto first = rem.terms().begin();
    Partition lambda = first->first;
    RationalFunction c = first->second;
    SymExpr cl = jackExpand(alpha, lambda, Normalization::C, vars);
    RationalFunction f = c / cl.coefficient(lambda);
    out.add(lambda, f);
    rem.addScaled(cl, -f);
  }
  return out;
}

SymExpr toMonomial(const RationalFunction& alpha, const SymExpr& e) {
  switch (e.basis()) {
    case Basis::Monomial: return e;
    case Basis::PowerSum: return p2m(ProductExpr::fromSymExpr(e), e.vars());
    default: {
      SymExpr r(Basis::Monomial, e.vars());
      Normalization norm = normalizationOf(e.basis());
      for (const auto& [q, c] : e.terms()) r.addScaled(jackExpand(alpha, q, norm, e.vars()), c);
      return r;
    }
  }
}

SymExpr jack2jack(const RationalFunction& alpha, const ProductExpr& e, VarCount vars) {
  if (vars.isGeneric() && e.hasProducts())
    throw UnsupportedModeError("products of Jack polynomials need a numeric number of variables");
  LeafFn leaf = [&](Basis b, const Partition& q) {
    switch (b) {
      case Basis::Monomial: return monomialLeaf(q, vars);
      case Basis::PowerSum: return powerSumAsMonomial(q, vars);
      default: return jackExpand(alpha, q, normalizationOf(b), vars);
    }
  };
  MulFn mul = [&](const SymExpr& x, const SymExpr& y) { return multiplyMonomial(x, y, vars); };
  return m2jack(alpha, evaluate(e.root(), Basis::Monomial, vars, leaf, mul), vars);
}

SymExpr linearCombination(const ProductExpr& e, VarCount vars) {
  if (e.hasProducts()) throw DomainError("expression contains products; convert it first");
  auto bases = e.leafBases();
  if (bases.size() > 1) throw DomainError("expression mixes bases; convert it first");
  Basis b = bases.empty() ? Basis::Monomial : bases[0];
  LeafFn leaf = [&](Basis, const Partition& q) {
    SymExpr r(b, vars);
    r.add(q, RationalFunction(1));
    return r;
  };
  MulFn mul = [&](const SymExpr&, const SymExpr&) -> SymExpr {
    throw ConsistencyError("unexpected product in linear combination");
  };
  return evaluate(e.root(), b, vars, leaf, mul);
}

mpz_class zee(const Partition& lambda) {
  mpz_class z = 1;
  std::map<int, int> mult;
  for (int part : lambda.parts()) ++mult[part];
  for (const auto& [i, a] : mult) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), a);
    mpz_class ip;
    mpz_ui_pow_ui(ip.get_mpz_t(), i, a);
    z *= f * ip;
  }
  return z;
}

RationalFunction alphaInnerProduct(const SymExpr& f, const SymExpr& g, const RationalFunction& alpha) {
  if (f.basis() != Basis::PowerSum || g.basis() != Basis::PowerSum)
    throw DomainError("alphaInnerProduct expects power-sum expressions");
  RationalFunction r;
  for (const auto& [q, c] : f.terms()) {
    RationalFunction d = g.coefficient(q);
    if (d.isZero()) continue;
    r += c * d * alpha.pow(q.length()) * RationalFunction(zee(q));
  }
  return r;
}

mpq_class monomialValue(const Partition& lambda, const std::vector<mpq_class>& xs) {
  int n = static_cast<int>(xs.size());
  if (lambda.length() > n) return 0;
  int top = lambda.empty() ? 0 : lambda[0];
  std::vector<std::vector<mpq_class>> pw(n, std::vector<mpq_class>(top + 1));
  for (int i = 0; i < n; ++i) {
    pw[i][0] = 1;
    for (int e = 1; e <= top; ++e) pw[i][e] = pw[i][e - 1] * xs[i];
  }
  mpq_class total = 0;
  for (const auto& a : arrangements(lambda, n)) {
    mpq_class t = 1;
    for (int i = 0; i < n; ++i)
      if (a[i]) t *= pw[i][a[i]];
    total += t;
  }
  return total;
}

mpq_class evalExact(const SymExpr& e, const std::vector<mpq_class>& xs, const std::optional<RationalFunction>& alpha) {
  int n = static_cast<int>(xs.size());
  SymExpr base = e.vars().isGeneric() ? e.withVars(VarCount::numeric(n)) : e;
  if (base.vars().value() != n) throw DomainError("point dimension does not match the number of variables");
  SymExpr mono = isJackBasis(base.basis())
                     ? (alpha ? toMonomial(*alpha, base) : throw DomainError("alpha is required for Jack bases"))
                     : toMonomial(RationalFunction(1), base);
  mpq_class total = 0;
  std::set<std::string> unbound;
  for (const auto& [q, c] : mono.terms()) {
    if (!c.isConstant()) {
      for (Param pr : c.freeParams()) unbound.insert(std::string(paramName(pr)));
      continue;
    }
    total += c.constantValue() * monomialValue(q, xs);
  }
  if (!unbound.empty()) {
    std::string list;
    for (const auto& s : unbound) list += (list.empty() ? "" : ", ") + s;
    throw DomainError("unbound parameters: " + list);
  }
  return total;
}

double evalNumeric(const SymExpr& e, const std::vector<double>& xs, const std::optional<RationalFunction>& alpha) {
  std::vector<mpq_class> q;
  q.reserve(xs.size());
  for (double x : xs) q.emplace_back(x);
  return evalExact(e, q, alpha).get_d();
}

}  // namespace mops
