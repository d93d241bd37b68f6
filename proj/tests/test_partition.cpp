#include "doctest.h"
#include "mops/errors.hpp"
#include "mops/partition.hpp"

using namespace mops;

namespace {
const RationalFunction a = RationalFunction::param(Param::Alpha);
}

TEST_CASE("partitionsOf") {
  auto p0 = partitionsOf(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].empty());
  auto p4 = partitionsOf(4);
  std::vector<Partition> expect{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  CHECK(p4 == expect);
  CHECK(partitionsOf(30).size() == 5604);
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
  for (int k = 0; k <= 20; ++k) {
    auto ps = partitionsOf(k);
    CHECK(ps.size() == static_cast<std::size_t>(counts[k]));
    for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i] < ps[i - 1]);
  }
  CHECK_THROWS_AS(partitionsOf(-1), DomainError);
}

TEST_CASE("subpartitionsOf") {
  std::vector<Partition> s1{{}, {1}};
  CHECK(subpartitionsOf({1}) == s1);
  std::vector<Partition> s21{{}, {1}, {1, 1}, {2}, {2, 1}};
  CHECK(subpartitionsOf({2, 1}) == s21);
  CHECK(subpartitionsOf({3, 3, 3, 3, 3}).size() == 56);
  // Brute force over component-wise dominated tuples.
  Partition k{4, 2, 2, 1};
  std::size_t brute = 0;
  for (int a1 = 0; a1 <= 4; ++a1)
    for (int a2 = 0; a2 <= std::min(a1, 2); ++a2)
      for (int a3 = 0; a3 <= std::min(a2, 2); ++a3)
        for (int a4 = 0; a4 <= std::min(a3, 1); ++a4) ++brute;
  CHECK(subpartitionsOf(k).size() == brute);
}

TEST_CASE("isSubpartition") {
  CHECK(isSubpartition({}, {3, 1}));
  CHECK_FALSE(isSubpartition({2, 2}, {3, 1}));
  CHECK(isSubpartition({1, 1}, {2, 1}));
}

TEST_CASE("compare") {
  CHECK(compare({3, 3}, {4, 1, 1}, Order::Dominance) == Comparison::Incomparable);
  CHECK(compare({2, 1}, {3}, Order::Dominance) == Comparison::Less);
  CHECK(compare({2, 2}, {2, 1}, Order::Lexicographic) == Comparison::Greater);
  CHECK_THROWS_AS(compare({2}, {3}, Order::Dominance), DomainError);
  for (int k = 0; k <= 8; ++k) {
    auto ps = partitionsOf(k);
    for (const auto& x : ps)
      for (const auto& y : ps) {
        Comparison d = compare(x, y, Order::Dominance);
        if (d == Comparison::Less) CHECK(compare(x, y, Order::Lexicographic) == Comparison::Less);
        CHECK((d == Comparison::Less || d == Comparison::Equal) == dominatedBy(x, y));
      }
  }
}

TEST_CASE("conjugate, arm, leg") {
  CHECK(conjugate({}) == Partition{});
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate({4, 2, 1}) == Partition{3, 2, 1, 1});
  CHECK(arm({3, 2}, {1, 1}) == 2);
  CHECK(leg({3, 2}, {1, 1}) == 1);
  CHECK(arm({3, 2}, {2, 2}) == 0);
  CHECK(leg({3, 2}, {2, 2}) == 0);
  CHECK(arm({2}, {1, 1}) == 1);
  CHECK(leg({2}, {1, 1}) == 0);
  CHECK_THROWS_AS(arm({2}, {2, 1}), DomainError);
  for (int k = 0; k <= 8; ++k)
    for (const auto& p : partitionsOf(k)) {
      Partition c = conjugate(p);
      CHECK(c.weight() == p.weight());
      CHECK(conjugate(c) == p);
      for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p[i - 1]; ++j) {
          CHECK(arm(p, {i, j}) == leg(c, {j, i}));
          CHECK(leg(p, {i, j}) == conjugate(p)[j - 1] - i);
        }
    }
}

TEST_CASE("hookProducts") {
  auto h2 = hookProducts(a, {2});
  CHECK(h2.c == 2 * a * a);
  CHECK(h2.cPrime == 1 + a);
  CHECK(h2.j == 2 * a * a * (1 + a));
  auto h11 = hookProducts(a, {1, 1});
  CHECK(h11.c == a * (1 + a));
  CHECK(h11.cPrime == RationalFunction(2));
  CHECK(h11.j == 2 * a * (1 + a));
  auto h0 = hookProducts(a, {});
  CHECK(h0.c.isOne());
  CHECK(h0.cPrime.isOne());
  CHECK(h0.j.isOne());
}

TEST_CASE("rho") {
  CHECK(rho(a, {2}) == RationalFunction(2));
  CHECK(rho(a, {1, 1}) == -2 / a);
  CHECK(rho(RationalFunction(1), {2, 1}).isZero());
  CHECK_THROWS_AS(rho(RationalFunction(0), {1}), DomainError);
  // Distinct rho along strict dominance.
  const RationalFunction samples[] = {RationalFunction::fraction(1, 3), RationalFunction::fraction(1, 2),
                                      RationalFunction(1), RationalFunction(2), RationalFunction(3)};
  for (int k = 1; k <= 7; ++k) {
    auto ps = partitionsOf(k);
    for (const auto& x : ps)
      for (const auto& y : ps) {
        if (x == y || !dominatedBy(y, x)) continue;
        CHECK(rho(a, x) != rho(a, y));
        for (const auto& s : samples) CHECK(rho(s, x) != rho(s, y));
      }
  }
}
