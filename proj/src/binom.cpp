#include "mops/binom.hpp"

#include <cmath>

#include "mops/cache.hpp"
#include "mops/errors.hpp"

namespace mops {

RationalFunction sfact(const RationalFunction& r, int k) {
  if (k < 0) throw DomainError("shifted factorial needs k >= 0");
  RationalFunction out(1);
  for (int i = 0; i < k; ++i) out *= r + RationalFunction(i);
  return out;
}

RationalFunction gsfact(const RationalFunction& alpha, const RationalFunction& r, const Partition& kappa) {
  checkAlpha(alpha);
  RationalFunction out(1);
  RationalFunction inv = alpha.inverse();
  for (int i = 0; i < kappa.length(); ++i) out *= sfact(r - RationalFunction(i) * inv, kappa[i]);
  return out;
}

namespace {

double logMvGammaSigned(double alpha, double a, int m, int& sign) {
  if (!(alpha > 0)) throw DomainError("mvGamma needs alpha > 0");
  if (m < 1) throw DomainError("mvGamma needs m >= 1");
  double logAbs = m * (m - 1) / (2.0 * alpha) * std::log(M_PI);
  sign = 1;
  for (int i = 0; i < m; ++i) {
    double x = a - i / alpha;
    if (x <= 0 && std::floor(x) == x) throw DomainError("mvGamma argument hits a pole of Gamma");
    int s = 1;
    logAbs += lgamma_r(x, &s);
    sign *= s;
  }
  return logAbs;
}

}  // namespace

double mvGamma(double alpha, double a, int m) {
  int sign = 1;
  double l = logMvGammaSigned(alpha, a, m, sign);
  return sign * std::exp(l);
}

double logMvGamma(double alpha, double a, int m) {
  int sign = 1;
  return logMvGammaSigned(alpha, a, m, sign);
}

RationalFunction contiguous(const RationalFunction& alpha, const Partition& sigma, int i) {
  checkAlpha(alpha);
  if (i < 1) throw DomainError("row index must be at least 1");
  auto up = sigma.incremented(i - 1);
  if (!up) throw DomainError("incrementing row " + std::to_string(i) + " of [" + sigma.toString() +
                             "] does not give a partition");
  int addedColumn = sigma[i - 1] + 1;
  RationalFunction g(1);
  for (int r = 1; r <= sigma.length(); ++r)
    for (int c = 1; c <= sigma[r - 1]; ++c) {
      Square s{r, c};
      if (c == addedColumn)
        g *= upperHook(alpha, sigma, s) * lowerHook(alpha, *up, s);
      else
        g *= lowerHook(alpha, sigma, s) * upperHook(alpha, *up, s);
    }
  return g / hookProducts(alpha, sigma).j;
}

namespace {

struct TableKey {
  RationalFunction alpha;
  Partition kappa;
};

struct TableKeyLess {
  bool operator()(const TableKey& a, const TableKey& b) const {
    if (a.kappa != b.kappa) return a.kappa < b.kappa;
    return RationalFunctionLess()(a.alpha, b.alpha);
  }
};

std::map<Partition, RationalFunction> computeTable(const RationalFunction& alpha, const Partition& kappa) {
  std::map<Partition, RationalFunction> t;
  int k = kappa.weight();
  t.emplace(kappa, RationalFunction(1));
  const auto& subs = subpartitionsOf(kappa);
  // Heavier sigma first so every sigma^(i) is already known.
  std::vector<const Partition*> order;
  for (const auto& s : subs) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(),
                   [](const Partition* a, const Partition* b) { return a->weight() > b->weight(); });
  for (const Partition* sp : order) {
    const Partition& sigma = *sp;
    if (sigma == kappa) continue;
    RationalFunction sum;
    for (int i = 0; i <= sigma.length(); ++i) {
      auto up = sigma.incremented(i);
      if (!up) continue;
      auto it = t.find(*up);
      if (it == t.end()) continue;
      sum += contiguous(alpha, sigma, i + 1) * it->second;
    }
    if (!sum.isZero()) t.emplace(sigma, sum / RationalFunction(k - sigma.weight()));
  }
  return t;
}

}  // namespace

const std::map<Partition, RationalFunction>& gbinomialTable(const RationalFunction& alpha, const Partition& kappa) {
  checkAlpha(alpha);
  static PersistentMemo<TableKey, std::map<Partition, RationalFunction>, TableKeyLess> cache;
  return cache.getOrCompute(TableKey{alpha, kappa}, [&] { return computeTable(alpha, kappa); });
}

RationalFunction gbinomial(const RationalFunction& alpha, const Partition& kappa, const Partition& sigma) {
  if (!isSubpartition(sigma, kappa)) return RationalFunction();
  const auto& t = gbinomialTable(alpha, kappa);
  auto it = t.find(sigma);
  return it == t.end() ? RationalFunction() : it->second;
}

}  // namespace mops
