#ifndef MOPS_PARTITION_HPP
#define MOPS_PARTITION_HPP

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "mops/scalar.hpp"

namespace mops {

// Non-increasing sequence of positive integers, stored without trailing zeros.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  // Sorts into non-increasing order and drops zeros.
  static Partition fromUnsorted(std::vector<int> parts);
  // Parses "2,1" (empty string is the empty partition).
  static Partition parse(const std::string& text);

  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  // 0-based part access with zero padding.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  const std::vector<int>& parts() const { return parts_; }

  // Row i (0-based) incremented / decremented, if the result is a partition.
  std::optional<Partition> incremented(int i) const;
  std::optional<Partition> decremented(int i) const;

  std::string toString() const;  // "2,1"

  auto operator<=>(const Partition& o) const = default;
  bool operator==(const Partition& o) const = default;

 private:
  std::vector<int> parts_;
};

// Decreasing lexicographic order, as used for expression term order.
struct PartitionDesc {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

enum class Order { Lexicographic, Dominance };
enum class Comparison { Less, Equal, Greater, Incomparable };

struct Square {
  int i;  // 1-based row
  int j;  // 1-based column
};

std::vector<Partition> partitionsOf(int k);
std::vector<Partition> partitionsOf(int k, int maxLength);
// All subpartitions in increasing lexicographic order (memoized).
const std::vector<Partition>& subpartitionsOf(const Partition& kappa);
bool isSubpartition(const Partition& sigma, const Partition& kappa);
Comparison compare(const Partition& lambda, const Partition& kappa, Order order);
bool dominatedBy(const Partition& lambda, const Partition& kappa);  // lambda <= kappa, equal weight
Partition conjugate(const Partition& kappa);
int arm(const Partition& kappa, Square s);
int leg(const Partition& kappa, Square s);

// Upper hook l + alpha(1 + a) and lower hook l + 1 + alpha a.
RationalFunction upperHook(const RationalFunction& alpha, const Partition& kappa, Square s);
RationalFunction lowerHook(const RationalFunction& alpha, const Partition& kappa, Square s);

struct HookProducts {
  RationalFunction c;       // product of upper hooks
  RationalFunction cPrime;  // product of lower hooks
  RationalFunction j;       // c * cPrime
};
const HookProducts& hookProducts(const RationalFunction& alpha, const Partition& kappa);

RationalFunction rho(const RationalFunction& alpha, const Partition& kappa);

// Validates a numeric alpha (nonzero) and returns it unchanged.
const RationalFunction& checkAlpha(const RationalFunction& alpha);

}  // namespace mops

#endif
