#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>

#include "doctest.h"
#include "mops/errors.hpp"
#include "mops/hypergeom.hpp"
#include "mops/jack.hpp"

using namespace mops;

namespace {
const RationalFunction a = RationalFunction::param(Param::Alpha);
const RationalFunction g = RationalFunction::param(Param::Gamma);
const RationalFunction r = RationalFunction::param(Param::R);

RationalFunction q(long num, long den = 1) { return RationalFunction::fraction(num, den); }

HypergeomSpec spec(RationalFunction alpha, std::vector<RationalFunction> up, std::vector<RationalFunction> low,
                   HypergeomArgument arg) {
  HypergeomSpec s;
  s.alpha = std::move(alpha);
  s.upper = std::move(up);
  s.lower = std::move(low);
  s.argument = std::move(arg);
  return s;
}

mpz_class fact(int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

// int_x^inf (y-x)^beta x^p y^p e^{-(x+y)/2} dy = e^{-x} * poly(x): two-variable
// smallest-eigenvalue marginal, beta = 2/alpha integer.
std::vector<mpq_class> smallestMarginalTwo(int beta, int p) {
  std::vector<mpq_class> poly(2 * p + 1);
  for (int j = 0; j <= p; ++j) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), p, j);
    mpz_class two;
    mpz_ui_pow_ui(two.get_mpz_t(), 2, beta + j + 1);
    poly[2 * p - j] += mpq_class(binom * fact(beta + j) * two);
  }
  return poly;
}

// He_0..He_{n-1} (probabilists'), ascending coefficients.
std::vector<std::vector<mpq_class>> hermiteHe(int n) {
  std::vector<std::vector<mpq_class>> he{{1}, {0, 1}};
  for (int j = 1; j + 1 < n; ++j) {
    std::vector<mpq_class> next(j + 2, 0);
    for (int i = 0; i <= j; ++i) next[i + 1] += he[j][i];
    for (int i = 0; i < j; ++i) next[i] -= j * he[j - 1][i];
    he.push_back(next);
  }
  he.resize(n);
  return he;
}
}  // namespace

TEST_CASE("0F0 partial sums of the exponential") {
  auto s = spec(a, {}, {}, HypergeomArgument::point({q(1)}));
  s.limit = 8;
  auto res = ghypergeom(s);
  mpq_class expect = 0;
  for (int k = 0; k <= 8; ++k) expect += mpq_class(1) / mpq_class(fact(k));
  CHECK(res.exact == RationalFunction(expect));
  CHECK(res.value == doctest::Approx(2.71827876).epsilon(1e-8));
  CHECK_FALSE(res.terminated);
}

TEST_CASE("1F0 is the binomial series") {
  auto s = spec(q(1), {q(3, 2)}, {}, HypergeomArgument::scalarIdentity(q(1, 3), 1));
  s.limit = 80;
  auto res = ghypergeom(s);
  CHECK(res.radiusFlag);
  CHECK(res.value == doctest::Approx(std::pow(2.0 / 3.0, -1.5)).epsilon(1e-14));
  // Symbolic parameter: layer k is (g)_k r^k / k!.
  auto sym = spec(a, {g}, {}, HypergeomArgument::scalarIdentity(r, 1));
  RationalFunction poch(1);
  for (int k = 0; k <= 5; ++k) {
    CHECK(hypergeomLayer(sym, k) == poch * r.pow(k) / RationalFunction(fact(k)));
    poch *= g + RationalFunction(k);
  }
}

TEST_CASE("0F0 layers follow the sum identity") {
  for (int m = 1; m <= 4; ++m) {
    auto s = spec(a, {}, {}, HypergeomArgument::scalarIdentity(r, m));
    for (int k = 0; k <= 6; ++k)
      CHECK(hypergeomLayer(s, k) == (RationalFunction(m) * r).pow(k) / RationalFunction(fact(k)));
  }
  // Two-variable point, numeric alpha: 0F0 = e^{x1 + x2}.
  auto s = spec(q(1, 2), {}, {}, HypergeomArgument::point({q(1, 2), q(1, 3)}));
  s.limit = 30;
  CHECK(ghypergeom(s).value == doctest::Approx(std::exp(5.0 / 6.0)).epsilon(1e-14));
}

TEST_CASE("point and scalar identity arguments agree") {
  for (RationalFunction alpha : {a, q(2), q(1, 3)}) {
    auto id = spec(alpha, {g}, {q(5, 2)}, HypergeomArgument::scalarIdentity(r, 3));
    auto pt = spec(alpha, {g}, {q(5, 2)}, HypergeomArgument::point({r, r, r}));
    for (int k = 0; k <= 4; ++k) CHECK(hypergeomLayer(id, k) == hypergeomLayer(pt, k));
  }
}

TEST_CASE("2F0 with p = 1") {
  // One variable: a single layer.
  auto s = spec(a, {q(-1), 2 / a + 1}, {}, HypergeomArgument::scalarIdentity(q(-2) / r, 1));
  auto res = ghypergeom(s);
  CHECK(res.terminated);
  CHECK(res.degree == 1);
  CHECK(res.exact == 1 + (2 / a + 1) * 2 / r);
  // Two variables: [1,1] survives since (-1)_[1,1] = (-1)(-1-1/alpha) != 0,
  // and its layer reduces to b (b - 1/alpha) y^2.
  RationalFunction b = 3 / a + 1, y = q(-2) / r;
  auto s2 = spec(a, {q(-1), b}, {}, HypergeomArgument::scalarIdentity(y, 2));
  auto res2 = ghypergeom(s2);
  CHECK(res2.degree == 2);
  CHECK(res2.exact == 1 - b * 2 * y + b * (b - 1 / a) * y * y);
}

TEST_CASE("terminating series are exact beyond the termination degree") {
  for (RationalFunction alpha : {a, q(1), q(1, 2)}) {
    auto s = spec(alpha, {q(-2), g}, {q(7, 3)}, HypergeomArgument::scalarIdentity(r, 3));
    auto full = ghypergeom(s);
    CHECK(full.degree == 6);
    CHECK_FALSE(full.exact.isZero());
    for (int L : {6, 7, 10}) {
      s.limit = L;
      CHECK(ghypergeom(s).exact == full.exact);
    }
    s.limit = 5;
    CHECK(ghypergeom(s).exact != full.exact);
  }
}

TEST_CASE("1F1 matches the univariate Kummer function and Kummer's relation") {
  for (double x : {-3.0, -0.5, 2.0}) {
    auto s = spec(q(1), {q(3, 2)}, {q(7, 2)}, HypergeomArgument::scalarIdentity(RationalFunction(mpq_class(x)), 1));
    s.tolerance = 1e-15;
    CHECK(ghypergeom(s).value == doctest::Approx(boost::math::hypergeometric_1F1(1.5, 3.5, x)).epsilon(1e-13));
  }
  // 1F1(a;b;X) = e^{tr X} 1F1(b-a;b;-X) at two points, alpha = 1/2 and 3.
  for (RationalFunction alpha : {q(1, 2), q(3)}) {
    std::vector<RationalFunction> x{q(1, 2), q(-1, 3)};
    auto lhs = spec(alpha, {q(3, 2)}, {q(9, 2)}, HypergeomArgument::point(x));
    auto rhs = spec(alpha, {q(3)}, {q(9, 2)}, HypergeomArgument::point({q(-1, 2), q(1, 3)}));
    lhs.tolerance = rhs.tolerance = 1e-15;
    CHECK(ghypergeom(lhs).value == doctest::Approx(std::exp(1.0 / 6.0) * ghypergeom(rhs).value).epsilon(1e-12));
  }
}

TEST_CASE("hypergeometric error paths") {
  auto pole = spec(a, {g}, {q(0)}, HypergeomArgument::scalarIdentity(r, 2));
  pole.limit = 3;
  CHECK_THROWS_AS(ghypergeom(pole), PoleError);
  // (b)_kappa vanishes at [1,1] for b = 1/alpha with alpha = 1/2: b - 1/alpha = 0.
  auto pole2 = spec(q(1, 2), {q(1)}, {q(2)}, HypergeomArgument::scalarIdentity(q(1), 2));
  pole2.limit = 2;
  CHECK_THROWS_AS(ghypergeom(pole2), PoleError);
  auto divergent = spec(a, {g, g}, {}, HypergeomArgument::scalarIdentity(r, 2));
  CHECK_THROWS_AS(ghypergeom(divergent), DomainError);
  auto symbolic = spec(a, {g}, {g}, HypergeomArgument::scalarIdentity(r, 2));
  symbolic.tolerance = 1e-10;
  CHECK_THROWS_AS(ghypergeom(symbolic), DomainError);
  auto slow = spec(q(1), {}, {}, HypergeomArgument::scalarIdentity(q(50), 2));
  slow.tolerance = 1e-14;
  slow.degreeCap = 10;
  CHECK_THROWS_AS(ghypergeom(slow), ConvergenceError);
}

TEST_CASE("smallest eigenvalue density") {
  // m = 1: x^p e^{-x/2}
  for (int p = 1; p <= 4; ++p) {
    auto f = smallestEigForm(a, p, 1);
    for (int j = 0; j <= p; ++j) CHECK(f.poly[j] == (j == p ? RationalFunction(1) : RationalFunction()));
  }
  // m = 2: proportional to the two-variable marginal of the joint density.
  for (int beta : {1, 2, 4})
    for (int p = 1; p <= 4; ++p) {
      auto f = smallestEigForm(q(2, beta), p, 2);
      auto oracle = smallestMarginalTwo(beta, p);
      REQUIRE(f.poly.size() == oracle.size());
      mpq_class ratio = f.poly.back().constantValue() / oracle.back();
      for (std::size_t j = 0; j < oracle.size(); ++j) CHECK(f.poly[j].constantValue() == ratio * oracle[j]);
    }
  // Terms vanish exactly for kappa_1 > p; the top layer p(m-1) survives.
  auto f = smallestEigForm(a, 3, 4);
  CHECK(f.f20Layers.size() == 10);
  CHECK_FALSE(f.f20Layers.back().isZero());
  HypergeomSpec s = spec(a, {q(-3), RationalFunction(4) / a + 1}, {}, HypergeomArgument::scalarIdentity(q(-2), 3));
  s.limit = 14;
  CHECK(ghypergeom(s).exact == ghypergeom(spec(a, s.upper, {}, s.argument)).exact);
  CHECK_THROWS_AS(smallestEigForm(a, 0, 2), DomainError);
}

TEST_CASE("smallest eigenvalue density normalization") {
  auto d = normalizedSmallestEigDensity(q(1), 1, 2);
  // exact mass: int x^j e^{-x m/2} = j! (2/m)^{j+1}
  double exact = 0;
  for (std::size_t j = 0; j < d.form.poly.size(); ++j)
    exact += d.form.poly[j].toDouble() * std::tgamma(j + 1.0) * std::pow(2.0 / d.form.m, j + 1.0);
  CHECK(d.mass == doctest::Approx(exact).epsilon(1e-10));
  double total = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(d, 0.0, d.cutoff, 15, 1e-12);
  CHECK(std::abs(total - 1) < 1e-8);
  CHECK(d(0.0) == 0);
}

TEST_CASE("Krishnaiah-Chang form at alpha = 2") {
  // 2F0(-p, (m+2)/2; -2 I_{m-1}/x) with zonal polynomials evaluated at the
  // explicit point, against the closed form.
  int p = 2, m = 3;
  double ratio0 = 0;
  for (double x : {0.5, 1.0, 2.5, 4.0, 7.5}) {
    RationalFunction y(mpq_class(-2.0 / x));
    auto s = spec(q(2), {q(-p), q(m + 2, 2)}, {}, HypergeomArgument::point({y, y}));
    double kc = std::pow(x, p * m) * std::exp(-x * m / 2) * ghypergeom(s).value;
    double ratio = smallestEigDensity(q(2), p, m, x) / kc;
    if (ratio0 == 0) ratio0 = ratio;
    CHECK(std::abs(ratio / ratio0 - 1) < 1e-10);
  }
}

TEST_CASE("largest eigenvalue CDF") {
  // m = 1, alpha = 2, gamma = (n-2)/2: chi-square with n degrees of freedom.
  for (int dof : {3, 4, 5})
    for (double x : {1.0, 4.0}) {
      auto c = largestEigCDF(q(2), q(dof - 2, 2), 1, x, 1e-15);
      CHECK(c.value == doctest::Approx(boost::math::gamma_p(dof / 2.0, x / 2)).epsilon(1e-12));
    }
  CHECK(largestEigCDF(q(1), q(1), 2, 0.0, 1e-12).value == 0);
  CHECK(largestEigCDF(q(1), q(1), 2, 1e-6, 1e-12).value < 1e-20);
  // alpha = 1, gamma = 1, m = 2: joint density (x1-x2)^2 x1 x2 e^{-(x1+x2)/2}.
  auto G = [](int j, double x) {
    return std::pow(2.0, j + 1) * std::tgamma(j + 1.0) * boost::math::gamma_p(j + 1.0, x / 2);
  };
  auto joint = [&](double x) { return 2 * G(3, x) * G(1, x) - 2 * G(2, x) * G(2, x); };
  double Z = 2 * std::pow(2.0, 4) * 6 * 4 - 2 * std::pow(8.0 * 2, 2);
  double prev = 0;
  for (double x = 0.5; x <= 30; x += 0.5) {
    auto c = largestEigCDF(q(1), q(1), 2, x, 1e-14);
    CHECK(c.value >= prev);
    CHECK(std::abs(c.raw - joint(x) / Z) < 1e-9);
    prev = c.value;
  }
  CHECK_THROWS_AS(largestEigCDF(q(1), q(-1), 2, 1.0, 1e-12), DomainError);
}

TEST_CASE("level density") {
  for (int beta : {2, 4, 6}) {
    auto f = levelDensityForm(beta, 1, false);
    CHECK(f.poly == std::vector<mpq_class>{1});
    CHECK(levelDensity(beta, 1, 0.7) == doctest::Approx(std::exp(-0.245) / std::sqrt(2 * M_PI)).epsilon(1e-14));
  }
  // beta = 2: (1/n) sum_{j<n} He_j(x)^2 / j!
  for (int n = 2; n <= 5; ++n) {
    auto he = hermiteHe(n);
    std::vector<mpq_class> expect(2 * n - 1, 0);
    for (int j = 0; j < n; ++j)
      for (std::size_t u = 0; u < he[j].size(); ++u)
        for (std::size_t v = 0; v < he[j].size(); ++v)
          expect[u + v] += he[j][u] * he[j][v] / mpq_class(fact(j) * n);
    auto f = levelDensityForm(2, n, false);
    std::vector<mpq_class> got = f.poly;
    for (auto& c : got) c *= f.constant;
    CHECK(got == expect);
  }
  for (int beta : {2, 4})
    for (double x : {0.3, 1.1, 2.9}) CHECK(levelDensity(beta, 4, x) == doctest::Approx(levelDensity(beta, 4, -x)));
  auto dens = [](double x) { return levelDensity(2, 4, x); };
  double mass = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(dens, -20.0, 20.0, 15, 1e-12);
  CHECK(std::abs(mass - 1) < 1e-6);
  CHECK_THROWS_AS(levelDensityForm(3, 2, false), DomainError);
  CHECK_THROWS_AS(levelDensityForm(0, 2, false), DomainError);
}

TEST_CASE("scaled level density, beta = 8, n = 5") {
  auto f = levelDensityForm(8, 5, true).canonical();
  CHECK(f.root == 10);
  CHECK(f.expCoefficient == 40);
  // Reference: sqrt(10) e^{-40 x^2} / (50685458503680000 sqrt(pi)) * P(x)
  const char* printed[] = {"2814749767106560000000000000000", "-2814749767106560000000000000000",
                           "1720515795143884800000000000000", "-696386684568207360000000000000",
                           "194340604354756608000000000000",  "-36625240845346406400000000000",
                           "4740055701777285120000000000",    "-658121972672102400000000000",
                           "162266873453346816000000000",     "-31084533121233715200000000",
                           "2673909486122434560000000",       "-136819200341311488000000",
                           "29341248756019200000000",         "-1130060455927603200000",
                           "67489799891754240000",            "-2060099901411552000",
                           "32632929952848225"};
  REQUIRE(f.poly.size() == 33);
  mpq_class scale = f.constant * mpq_class(mpz_class("50685458503680000"));
  for (int i = 0; i <= 16; ++i) {
    CHECK(f.poly[32 - 2 * i] * scale == mpq_class(mpz_class(printed[i])));
    if (i < 16) CHECK(f.poly[31 - 2 * i] == 0);
  }
  double s = std::sqrt(80.0);
  CHECK(scaledLevelDensity(8, 5, 0.2) == doctest::Approx(s * levelDensity(8, 5, 0.2 * s)).epsilon(1e-12));
}
