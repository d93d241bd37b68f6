#include "doctest.h"
#include "mops/binom.hpp"
#include "mops/errors.hpp"
#include "mops/jack.hpp"

using namespace mops;

namespace {
const RationalFunction a = RationalFunction::param(Param::Alpha);
const RationalFunction n = RationalFunction::param(Param::N);
const VarCount gen = VarCount::generic();

SymExpr mono(std::vector<std::pair<Partition, RationalFunction>> ts, VarCount v = VarCount::generic()) {
  SymExpr e(Basis::Monomial, v);
  for (auto& [p, c] : ts) e.add(p, c);
  return e;
}
}  // namespace

TEST_CASE("J table rows") {
  CHECK(jackExpand(a, {1}, Normalization::J, gen) == mono({{{1}, 1}}));
  CHECK(jackExpand(a, {2}, Normalization::J, gen) == mono({{{2}, 1 + a}, {{1, 1}, 2}}));
  CHECK(jackExpand(a, {1, 1}, Normalization::J, gen) == mono({{{1, 1}, 2}}));
  // The m[3] entry is (1+a)(1+2a): at a=2 the zonal value is 15.
  CHECK(jackExpand(a, {3}, Normalization::J, gen) ==
        mono({{{3}, (1 + a) * (1 + 2 * a)}, {{2, 1}, 3 * (1 + a)}, {{1, 1, 1}, 6}}));
  CHECK(jackExpand(a, {2, 1}, Normalization::J, gen) == mono({{{2, 1}, 2 + a}, {{1, 1, 1}, 6}}));
  CHECK(jackExpand(a, {1, 1, 1}, Normalization::J, gen) == mono({{{1, 1, 1}, 6}}));
  CHECK(jackExpand(a, {4}, Normalization::J, gen) ==
        mono({{{4}, (1 + a) * (1 + 2 * a) * (1 + 3 * a)},
              {{3, 1}, 4 * (1 + a) * (1 + 2 * a)},
              {{2, 2}, 6 * (1 + a) * (1 + a)},
              {{2, 1, 1}, 12 * (1 + a)},
              {{1, 1, 1, 1}, 24}}));
  CHECK(jackExpand(a, {3, 1}, Normalization::J, gen) ==
        mono({{{3, 1}, 2 * (1 + a) * (1 + a)}, {{2, 2}, 4 * (1 + a)}, {{2, 1, 1}, 2 * (5 + 3 * a)}, {{1, 1, 1, 1}, 24}}));
  CHECK(jackExpand(a, {2, 2}, Normalization::J, gen) ==
        mono({{{2, 2}, 2 * (2 + a) * (1 + a)}, {{2, 1, 1}, 4 * (2 + a)}, {{1, 1, 1, 1}, 24}}));
  CHECK(jackExpand(a, {2, 1, 1}, Normalization::J, gen) == mono({{{2, 1, 1}, 2 * (3 + a)}, {{1, 1, 1, 1}, 24}}));
  CHECK(jackExpand(a, {1, 1, 1, 1}, Normalization::J, gen) == mono({{{1, 1, 1, 1}, 24}}));
}

TEST_CASE("P with two variables") {
  CHECK(jackExpand(a, {3}, Normalization::P, VarCount::numeric(2)) ==
        mono({{{3}, 1}, {{2, 1}, 3 / (1 + 2 * a)}}, VarCount::numeric(2)));
  CHECK(jackExpand(a, {1, 1, 1}, Normalization::C, VarCount::numeric(2)).isZero());
  for (int k = 1; k <= 5; ++k)
    for (const auto& kap : partitionsOf(k))
      for (int nv = 0; nv < kap.length(); ++nv)
        CHECK(jackExpand(a, kap, Normalization::J, VarCount::numeric(nv)).isZero());
}

TEST_CASE("numeric alpha agrees with substitution") {
  for (const auto& kap : partitionsOf(4)) {
    SymExpr sym = jackExpand(a, kap, Normalization::C, gen);
    SymExpr num = jackExpand(RationalFunction::fraction(2, 3), kap, Normalization::C, gen);
    for (const auto& [lam, c] : sym.terms())
      CHECK(c.substitute({{Param::Alpha, mpq_class(2, 3)}}) == num.coefficient(lam));
  }
  CHECK_THROWS_AS(jackExpand(RationalFunction(0), {1}, Normalization::C, gen), DomainError);
  // rho([2]) = rho([1,1]) at alpha = -1.
  CHECK_THROWS_AS(jackExpand(RationalFunction(-1), {2}, Normalization::C, gen), PoleError);
}

TEST_CASE("normalization factors") {
  CHECK(normalizationFactor(Normalization::C, Normalization::C, a, {3, 1}) == 1);
  CHECK(normalizationFactor(Normalization::C, Normalization::J, a, {2}) == 1 / (1 + a));
  // J_[1,1] = 2 m_[1,1] and P_[1,1] = m_[1,1].
  CHECK(normalizationFactor(Normalization::J, Normalization::P, a, {1, 1}) == 2);
  for (int k = 1; k <= 4; ++k)
    for (const auto& kap : partitionsOf(k))
      for (auto f : {Normalization::C, Normalization::J, Normalization::P})
        for (auto t : {Normalization::C, Normalization::J, Normalization::P}) {
          SymExpr lhs = jackExpand(a, kap, f, gen);
          SymExpr rhs = jackExpand(a, kap, t, gen).scaled(normalizationFactor(f, t, a, kap));
          CHECK(lhs == rhs);
        }
}

TEST_CASE("identity values") {
  CHECK(jackIdentityValue(a, {1}, Normalization::C, n) == n);
  CHECK(jackIdentityValue(a, {2}, Normalization::J, RationalFunction(2)) == 2 * (2 + a));
  CHECK(jackIdentityValue(a, {2, 1}, Normalization::C, RationalFunction(1)).isZero());
  for (int k = 1; k <= 4; ++k)
    for (const auto& kap : partitionsOf(k))
      for (auto norm : {Normalization::C, Normalization::J, Normalization::P})
        for (int m = 1; m <= 4; ++m) {
          SymExpr e = jackExpand(a, kap, norm, VarCount::numeric(m));
          RationalFunction direct;
          std::vector<mpq_class> ones(m, 1);
          for (const auto& [lam, c] : e.terms()) direct += c * RationalFunction(monomialValue(lam, ones));
          CHECK(direct == jackIdentityValue(a, kap, norm, RationalFunction(m)));
        }
  double direct = evalNumeric(jackExpand(RationalFunction(1), {2, 2, 2, 2, 2}, Normalization::J, VarCount::numeric(5)),
                              {1, 1, 1, 1, 1});
  double formula = jackIdentityValue(RationalFunction(1), {2, 2, 2, 2, 2}, Normalization::J, RationalFunction(5)).toDouble();
  CHECK(direct == doctest::Approx(formula).epsilon(1e-12));
}

TEST_CASE("D* eigenfunctions") {
  CHECK(applyDStar(mono({{{1}, 1}}, VarCount::numeric(3)), a, 3) == mono({{{1}, 4 / a}}, VarCount::numeric(3)));
  for (int k = 1; k <= 4; ++k)
    for (const auto& kap : partitionsOf(k)) {
      SymExpr c = jackExpand(a, kap, Normalization::C, VarCount::numeric(3));
      RationalFunction ev = rho(a, kap) + 2 / a * RationalFunction(k * 2);
      CHECK(applyDStar(c, a, 3) == c.scaled(ev));
    }
  SymExpr c11 = jackExpand(a, {1, 1}, Normalization::C, VarCount::numeric(2));
  CHECK(applyDStar(c11, a, 2) == c11.scaled(-2 / a + 2 / a * 2));
  CHECK(applyDStar(jackExpand(a, {2}, Normalization::C, VarCount::numeric(2)), a, 2) ==
        jackExpand(a, {2}, Normalization::C, VarCount::numeric(2)).scaled(2 + 4 / a));
  CHECK_THROWS_AS(applyDStar(c11, a, 7), DomainError);
}

TEST_CASE("P triangularity and positivity") {
  for (int k = 1; k <= 6; ++k)
    for (const auto& kap : partitionsOf(k)) {
      SymExpr pk = jackExpand(a, kap, Normalization::P, gen);
      CHECK(pk.coefficient(kap) == 1);
      for (const auto& [lam, c] : pk.terms()) {
        CHECK(dominatedBy(lam, kap));
        if (lam == kap) continue;
        for (mpq_class s : {mpq_class(1, 2), mpq_class(1), mpq_class(2), mpq_class(3)})
          CHECK(c.substitute({{Param::Alpha, s}}).constantValue() > 0);
        auto lim = c.limitAtInfinity(Param::Alpha);
        CHECK(lim.kind == LimitResult::Kind::Finite);
        CHECK(lim.value.isZero());
      }
      CHECK(jackExpand(a, kap, Normalization::J, gen).coefficient(Partition(std::vector<int>(k, 1))) ==
            RationalFunction(mpz_class(std::vector<int>{1, 1, 2, 6, 24, 120, 720}[k])));
    }
}
