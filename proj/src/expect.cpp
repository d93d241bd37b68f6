#include "mops/expect.hpp"

#include "mops/binom.hpp"
#include "mops/errors.hpp"
#include "mops/jack.hpp"

namespace mops {

namespace {

void requireAboveMinusOne(const RationalFunction& v, const char* name) {
  if (v.isConstant() && v.constantValue() <= -1)
    throw DomainError(std::string(name) + " must exceed -1, got " + v.toString());
}

void requirePositiveAlpha(const RationalFunction& alpha) {
  checkAlpha(alpha);
  if (alpha.isConstant() && alpha.constantValue() <= 0)
    throw DomainError("ensemble alpha must be positive, got " + alpha.toString());
}

using NodePtr = ProductExpr::NodePtr;

// The expression as a C-basis combination when it is linear in Jack leaves;
// nullopt when a non-Jack leaf or a genuine product appears.
std::optional<SymExpr> linearJackC(const NodePtr& node, const RationalFunction& alpha, VarCount vars) {
  using Kind = ProductExpr::Kind;
  SymExpr out(Basis::JackC, vars);
  if (auto s = ProductExpr(node).scalarOnly()) {
    out.add(Partition(), *s);
    return out;
  }
  switch (node->kind) {
    case Kind::Leaf:
      if (!isJackBasis(node->basis)) return std::nullopt;
      out.add(node->partition,
              normalizationFactor(normalizationOf(node->basis), Normalization::C, alpha, node->partition));
      return out;
    case Kind::Sum:
      for (const auto& c : node->children) {
        auto part = linearJackC(c, alpha, vars);
        if (!part) return std::nullopt;
        out.addScaled(*part, RationalFunction(1));
      }
      return out;
    case Kind::Product: {
      RationalFunction scale(1);
      std::optional<SymExpr> body;
      for (const auto& c : node->children) {
        if (auto s = ProductExpr(c).scalarOnly()) {
          scale *= *s;
          continue;
        }
        if (body) return std::nullopt;
        body = linearJackC(c, alpha, vars);
        if (!body) return std::nullopt;
      }
      return body->scaled(scale);
    }
    case Kind::Power:
      if (node->exponent != 1) return std::nullopt;
      return linearJackC(node->children.at(0), alpha, vars);
    case Kind::Scalar:
      break;
  }
  return std::nullopt;
}

}  // namespace

Ensemble Ensemble::hermite(RationalFunction alpha, VarCount vars) {
  requirePositiveAlpha(alpha);
  Ensemble e;
  e.family = Family::Hermite;
  e.alpha = std::move(alpha);
  e.vars = vars;
  return e;
}

Ensemble Ensemble::laguerre(RationalFunction alpha, RationalFunction gamma, VarCount vars) {
  requirePositiveAlpha(alpha);
  requireAboveMinusOne(gamma, "gamma");
  Ensemble e;
  e.family = Family::Laguerre;
  e.alpha = std::move(alpha);
  e.gamma = std::move(gamma);
  e.vars = vars;
  return e;
}

Ensemble Ensemble::jacobi(RationalFunction alpha, RationalFunction g1, RationalFunction g2, VarCount vars) {
  requirePositiveAlpha(alpha);
  requireAboveMinusOne(g1, "g1");
  requireAboveMinusOne(g2, "g2");
  Ensemble e;
  e.family = Family::Jacobi;
  e.alpha = std::move(alpha);
  e.g1 = std::move(g1);
  e.g2 = std::move(g2);
  e.vars = vars;
  return e;
}

RationalFunction expectJackC(const Ensemble& ens, const Partition& kappa) {
  if (!ens.vars.admits(kappa)) return RationalFunction();
  if (kappa.empty()) return RationalFunction(1);
  const RationalFunction& a = ens.alpha;
  RationalFunction n = ens.vars.asScalar();
  int k = kappa.weight();
  switch (ens.family) {
    case Family::Hermite: {
      if (k % 2) return RationalFunction();
      RationalFunction h0 = hermiteConstantTerm(a, kappa, ens.vars);
      return (k / 2) % 2 ? -h0 : h0;
    }
    case Family::Laguerre:
      return gsfact(a, ens.gamma + (n - 1) / a + 1, kappa) * jackIdentityValue(a, kappa, Normalization::C, n);
    case Family::Jacobi: {
      RationalFunction top = gsfact(a, ens.g1 + (n - 1) / a + 1, kappa);
      RationalFunction bottom = gsfact(a, ens.g1 + ens.g2 + RationalFunction(2) / a * (n - 1) + 2, kappa);
      if (bottom.isZero()) throw PoleError("Jacobi expectation denominator vanishes at [" + kappa.toString() + "]");
      return top / bottom * jackIdentityValue(a, kappa, Normalization::C, n);
    }
  }
  return RationalFunction();
}

RationalFunction expectJackC(const Ensemble& ens, const SymExpr& jackC) {
  if (jackC.basis() != Basis::JackC) throw DomainError("expected a C-normalized Jack combination");
  RationalFunction total;
  for (const auto& [kappa, c] : jackC.terms()) total += c * expectJackC(ens, kappa);
  return total;
}

RationalFunction expectJackExpr(const Ensemble& ens, const ProductExpr& e) {
  if (auto lin = linearJackC(e.node(), ens.alpha, ens.vars)) return expectJackC(ens, *lin);
  return expectJackC(ens, jack2jack(ens.alpha, e, ens.vars));
}

RationalFunction expectMonomialExpr(const Ensemble& ens, const ProductExpr& e) {
  for (Basis b : e.leafBases())
    if (b != Basis::Monomial) throw DomainError("expected an expression in monomials");
  if (ens.vars.isGeneric() && e.hasProducts())
    throw UnsupportedModeError("products need a numeric number of variables");
  SymExpr mono = m2m(e, ens.vars);
  return expectJackC(ens, m2jack(ens.alpha, mono, ens.vars));
}

ConjectureEntry checkConjectureEntry(const RationalFunction& alpha, const Partition& lambda,
                                     const RationalFunction& f) {
  ConjectureEntry entry;
  entry.lambda = lambda;
  entry.f = f;
  // The i = 1 factor (0)_{lambda_1} vanishes identically and is left out.
  RationalFunction prod(1);
  for (int i = 1; i < lambda.length(); ++i) prod *= sfact(RationalFunction(-i) / alpha, lambda[i]);
  entry.product = prod;
  if (prod.isZero()) {
    entry.note = "product vanishes at this alpha";
    return entry;
  }
  entry.ratio = f / prod;
  if (!entry.ratio.isConstant()) {
    entry.note = "f / product depends on alpha: " + entry.ratio.toString();
    return entry;
  }
  mpq_class r = entry.ratio.constantValue();
  if (r == 0 || abs(r.get_num()) != 1) {
    entry.note = "f / product = " + r.get_str() + " is not the reciprocal of an integer";
    return entry;
  }
  entry.n = r.get_num() * r.get_den();
  entry.conforms = true;
  return entry;
}

ConjectureReport conjectureCoefficients(const RationalFunction& alpha, int k, int cap) {
  checkAlpha(alpha);
  if (k < 1) throw DomainError("k must be positive");
  if (k > cap) throw DomainError("k = " + std::to_string(k) + " exceeds the cap " + std::to_string(cap));
  SymExpr mk(Basis::Monomial, VarCount::generic());
  mk.add(Partition{k}, RationalFunction(1));
  SymExpr c = m2jack(alpha, mk, VarCount::generic());
  ConjectureReport report;
  report.k = k;
  for (const Partition& lambda : partitionsOf(k)) {
    ConjectureEntry e = checkConjectureEntry(alpha, lambda, c.coefficient(lambda));
    report.allConform = report.allConform && e.conforms;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace mops
