#include <cmath>
#include <random>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "doctest.h"
#include "mops/binom.hpp"
#include "mops/errors.hpp"
#include "mops/expect.hpp"
#include "mops/jack.hpp"
#include "oracles.hpp"

using namespace mops;

namespace {
const RationalFunction a = RationalFunction::param(Param::Alpha);
const RationalFunction n = RationalFunction::param(Param::N);
const RationalFunction g = RationalFunction::param(Param::Gamma);
const RationalFunction g1 = RationalFunction::param(Param::G1);
const RationalFunction g2 = RationalFunction::param(Param::G2);
const VarCount gen = VarCount::generic();

RationalFunction q(long num, long den = 1) { return RationalFunction::fraction(num, den); }

SymExpr monomial(const Partition& p, VarCount vars) {
  SymExpr e(Basis::Monomial, vars);
  e.add(p, RationalFunction(1));
  return e;
}
}  // namespace

TEST_CASE("expectJackC closed forms") {
  auto H = Ensemble::hermite(a, gen);
  CHECK(expectJackC(H, {1}).isZero());
  CHECK(expectJackC(H, {2, 1}).isZero());
  CHECK(expectJackC(H, {2}) == n * (n + a) / (1 + a));
  CHECK(expectJackC(H, Partition()) == 1);
  for (int k = 1; k <= 5; ++k) {
    auto L = Ensemble::laguerre(a, g, VarCount::numeric(1));
    CHECK(expectJackC(L, {k}) == sfact(g + 1, k));
  }
  // l(kappa) > n gives zero
  CHECK(expectJackC(Ensemble::laguerre(a, g, VarCount::numeric(1)), {1, 1}).isZero());
  CHECK_THROWS_AS(Ensemble::laguerre(a, q(-1), gen), DomainError);
  CHECK_THROWS_AS(Ensemble::jacobi(a, q(0), q(-3, 2), gen), DomainError);
  CHECK_THROWS_AS(Ensemble::hermite(q(-1), gen), DomainError);
}

TEST_CASE("Hermite C_[2] against the rotation oracle") {
  for (int nv : {1, 2}) {
    VarCount vars = VarCount::numeric(nv);
    SymExpr c2 = jackExpand(a, {2}, Normalization::C, vars);
    CHECK(expectJackC(Ensemble::hermite(a, vars), {2}) == oracle::hermiteExpectationSmall(c2, nv, a));
  }
}

TEST_CASE("Hermite expectation equals the constant term of both constructions") {
  auto H = Ensemble::hermite(a, gen);
  for (int k = 1; k <= 5; ++k)
    for (const Partition& kappa : partitionsOf(k)) {
      RationalFunction sign = (k / 2) % 2 ? RationalFunction(-1) : RationalFunction(1);
      RationalFunction e = expectJackC(H, kappa);
      CHECK(e == sign * evalAtZero(hermite(a, kappa, gen)));
      CHECK(e == sign * evalAtZero(hermite2(a, kappa, gen)));
    }
}

TEST_CASE("worked example J[2,1]*C[1,1,1] over Hermite, n = 3") {
  auto H = Ensemble::hermite(a, VarCount::numeric(3));
  ProductExpr e = J({2, 1}) * C({1, 1, 1});
  CHECK(expectJackExpr(H, e) == -36 * (a - 1) * (a + 3) / ((1 + a) * (2 + a)));
}

TEST_CASE("monomial expectations") {
  auto H = Ensemble::hermite(a, gen);
  CHECK(expectMonomialExpr(H, m({2})) == n + n * (n - 1) / a);
  auto L = Ensemble::laguerre(a, g, VarCount::numeric(1));
  CHECK(expectMonomialExpr(L, m({1})) == g + 1);
  CHECK_THROWS_AS(expectMonomialExpr(H, C({2})), DomainError);
  CHECK_THROWS_AS(expectMonomialExpr(H, m({1}) * m({1})), UnsupportedModeError);
  // Rotation oracle at n = 1, 2 for monomial products up to weight 6.
  for (int nv : {1, 2}) {
    VarCount vars = VarCount::numeric(nv);
    auto Hn = Ensemble::hermite(a, vars);
    for (int k = 1; k <= 6; ++k)
      for (const Partition& lam : partitionsOf(k, nv)) {
        CHECK(expectMonomialExpr(Hn, m(lam)) == oracle::hermiteExpectationSmall(monomial(lam, vars), nv, a));
      }
    ProductExpr prod = m({2}) * m({1});
    SymExpr flat = m2m(prod * m({1}), vars);
    CHECK(expectMonomialExpr(Hn, prod * m({1})) == oracle::hermiteExpectationSmall(flat, nv, a));
  }
}

TEST_CASE("Laguerre and Jacobi expectations against two-variable integrals") {
  VarCount two = VarCount::numeric(2);
  for (int beta : {2, 4}) {
    RationalFunction alpha = q(2, beta);
    auto L = Ensemble::laguerre(alpha, g, two);
    auto Jc = Ensemble::jacobi(alpha, g1, g2, two);
    for (int k = 1; k <= 4; ++k)
      for (const Partition& lam : partitionsOf(k, 2)) {
        SymExpr mono = monomial(lam, two);
        CHECK(expectMonomialExpr(L, m(lam)) == oracle::laguerreExpectationTwo(mono, beta, g));
        CHECK(expectMonomialExpr(Jc, m(lam)) == oracle::jacobiExpectationTwo(mono, beta, g1, g2));
      }
  }
}

TEST_CASE("linearity on random expressions") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coef(-5, 5);
  VarCount three = VarCount::numeric(3);
  std::vector<Ensemble> ensembles{Ensemble::hermite(a, three), Ensemble::laguerre(a, q(1, 2), three),
                                  Ensemble::jacobi(a, q(1, 3), q(2), three)};
  auto randomExpr = [&](int weight) {
    std::vector<ProductExpr> terms;
    for (const Partition& lam : partitionsOf(weight, 3))
      if (int c = coef(rng)) terms.push_back(scalar(RationalFunction(c)) * m(lam));
    terms.push_back(m({1}) * m({1}));
    return ProductExpr::sum(terms);
  };
  for (const auto& ens : ensembles)
    for (int trial = 0; trial < 4; ++trial) {
      int w = 1 + trial % 4;
      ProductExpr f = randomExpr(w), h = randomExpr(1 + (trial + 2) % 4);
      RationalFunction x(coef(rng)), y(coef(rng) + 7);
      ProductExpr combo = scalar(x) * f + scalar(y) * h;
      CHECK(expectMonomialExpr(ens, combo) == x * expectMonomialExpr(ens, f) + y * expectMonomialExpr(ens, h));
    }
}

TEST_CASE("odd Hermite expectations vanish") {
  VarCount three = VarCount::numeric(3);
  auto H3 = Ensemble::hermite(a, three);
  auto Hg = Ensemble::hermite(a, gen);
  for (int k = 1; k <= 7; k += 2)
    for (const Partition& lam : partitionsOf(k)) {
      CHECK(expectMonomialExpr(Hg, m(lam)).isZero());
      if (lam.length() <= 3) CHECK(expectMonomialExpr(H3, m(lam) * m({2})).isZero());
    }
}

TEST_CASE("determinant moments and duality") {
  Partition k25{2, 2, 2, 2, 2};
  auto H = Ensemble::hermite(a, VarCount::numeric(5));
  RationalFunction poly = a.pow(4) + 10 * a.pow(3) + 45 * a.pow(2) + 80 * a + 89;
  CHECK(expectJackExpr(H, C(k25)) / jackIdentityValue(a, k25, Normalization::C, 5) == poly / a.pow(4));
  RationalFunction inv = a.inverse();
  auto Hd = Ensemble::hermite(inv, VarCount::numeric(2));
  CHECK(expectJackExpr(Hd, C({5, 5})) / jackIdentityValue(inv, {5, 5}, Normalization::C, 2) == -a * poly);
}

TEST_CASE("trace powers") {
  RationalFunction e6 = expectMonomialExpr(Ensemble::hermite(a, gen), m({6}));
  REQUIRE_FALSE(e6.denominator().dependsOn(Param::N));
  Polynomial num = e6.numerator();
  RationalFunction den(e6.denominator());
  auto coeff = [&](int p) { return RationalFunction(num.coefficientIn(Param::N, p)) / den; };
  CHECK(coeff(0).isZero());
  CHECK(coeff(1) == (15 * a.pow(3) - 32 * a.pow(2) + 32 * a - 15) / a.pow(3));
  CHECK(coeff(2) == (32 * a.pow(2) - 54 * a + 32) / a.pow(3));
  CHECK(coeff(3) == (22 * a - 22) / a.pow(3));
  CHECK(coeff(4) == 5 / a.pow(3));
  CHECK(e6.substitute({{Param::Alpha, 1}}) == 5 * n.pow(4) + 10 * n.pow(2));
}

TEST_CASE("univariate triad by quadrature") {
  using namespace boost::math::quadrature;
  VarCount one = VarCount::numeric(1);
  sinh_sinh<double> ss;
  exp_sinh<double> es;
  tanh_sinh<double> ts;
  double gam = 0.5, ga = 0.5, gb = 1.5;
  for (int k = 1; k <= 6; ++k) {
    // Cut the integrands off where they underflow, so inf * 0 never occurs.
    double h = ss.integrate([&](double x) { return std::abs(x) > 60 ? 0.0 : std::pow(x, k) * std::exp(-x * x / 2); }) /
               std::sqrt(2 * M_PI);
    double l = es.integrate([&](double x) { return x > 700 ? 0.0 : std::pow(x, k + gam) * std::exp(-x); }) /
               std::tgamma(gam + 1);
    // xc is the signed distance to the nearer endpoint.
    auto oneMinus = [](double x, double xc) { return xc > 0 ? xc : 1 - x; };
    double jn = ts.integrate(
        [&](double x, double xc) { return std::pow(x, k + ga) * std::pow(oneMinus(x, xc), gb); }, 0.0, 1.0);
    double jd =
        ts.integrate([&](double x, double xc) { return std::pow(x, ga) * std::pow(oneMinus(x, xc), gb); }, 0.0, 1.0);
    double hExact = expectJackC(Ensemble::hermite(q(1), one), {k}).toDouble();
    double lExact = expectJackC(Ensemble::laguerre(q(1), q(1, 2), one), {k}).toDouble();
    double jExact = expectJackC(Ensemble::jacobi(q(1), q(1, 2), q(3, 2), one), {k}).toDouble();
    CHECK(std::abs(h - hExact) < 1e-10 * std::max(1.0, hExact));
    CHECK(std::abs(l - lExact) < 1e-10 * std::max(1.0, lExact));
    CHECK(std::abs(jn / jd - jExact) < 1e-10);
    // (2k-1)!! convention: k-th moment is (k-1)!! for even k.
    if (k % 2 == 0) {
      double df = 1;
      for (int t = k - 1; t > 1; t -= 2) df *= t;
      CHECK(hExact == df);
    }
    CHECK(lExact == doctest::Approx(std::tgamma(gam + 1 + k) / std::tgamma(gam + 1)).epsilon(1e-13));
    CHECK(jExact == doctest::Approx(std::tgamma(ga + 1 + k) * std::tgamma(ga + gb + 2) /
                                    (std::tgamma(ga + 1) * std::tgamma(ga + gb + k + 2)))
                        .epsilon(1e-13));
  }
}

TEST_CASE("conjecture coefficients") {
  auto r1 = conjectureCoefficients(a, 1);
  REQUIRE(r1.entries.size() == 1);
  CHECK(r1.entries[0].f == 1);
  CHECK(*r1.entries[0].n == 1);
  auto r2 = conjectureCoefficients(a, 2);
  for (const auto& e : r2.entries)
    if (e.lambda == Partition{1, 1}) {
      CHECK(e.f == -1 / a);
      CHECK(e.product == -1 / a);
      CHECK(*e.n == 1);
    }
  for (int k = 1; k <= 6; ++k) {
    auto r = conjectureCoefficients(a, k);
    CHECK(r.allConform);
    CHECK(r.entries.size() == partitionsOf(k).size());
    for (const auto& e : r.entries) CHECK((e.n && *e.n != 0));
  }
  // A non-conforming coefficient is reported, not thrown.
  auto bad = checkConjectureEntry(a, {2, 1}, (1 + a) / a);
  CHECK_FALSE(bad.conforms);
  CHECK_FALSE(bad.note.empty());
  auto bad2 = checkConjectureEntry(a, {2, 1}, -2 / (3 * a));
  CHECK_FALSE(bad2.conforms);
  CHECK_THROWS_AS(conjectureCoefficients(a, 9), DomainError);
}
