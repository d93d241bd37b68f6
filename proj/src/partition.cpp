#include "mops/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

#include "mops/cache.hpp"
#include "mops/errors.hpp"

namespace mops {

namespace {

void validate(std::vector<int>& parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw DomainError("partition parts must be non-increasing");
  }
}

void generate(int remaining, int maxPart, int maxLength, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == maxLength) return;
  for (int p = std::min(remaining, maxPart); p >= 1; --p) {
    cur.push_back(p);
    generate(remaining - p, p, maxLength, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { validate(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(parts_); }

Partition Partition::fromUnsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (!parts.empty() && parts.back() < 0) throw DomainError("partition parts must be non-negative");
  return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    std::size_t a = cur.find_first_not_of(" \t");
    if (a == std::string::npos) {
      if (!parts.empty() || !cur.empty()) throw DomainError("malformed partition '" + text + "'");
      return;
    }
    std::size_t b = cur.find_last_not_of(" \t");
    std::string t = cur.substr(a, b - a + 1);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      throw DomainError("malformed partition '" + text + "'");
    parts.push_back(std::stoi(t));
    cur.clear();
  };
  std::string body = text;
  if (!body.empty() && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
  if (body.find_first_not_of(" \t") == std::string::npos) return {};
  for (char ch : body) {
    if (ch == ',') {
      flush();
      if (parts.empty()) throw DomainError("malformed partition '" + text + "'");
    } else {
      cur.push_back(ch);
    }
  }
  flush();
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::optional<Partition> Partition::incremented(int i) const {
  if (i < 0 || i > length()) return std::nullopt;
  if (i > 0 && (*this)[i - 1] < (*this)[i] + 1) return std::nullopt;
  std::vector<int> p = parts_;
  if (i == length()) p.push_back(1);
  else ++p[i];
  return Partition(std::move(p));
}

std::optional<Partition> Partition::decremented(int i) const {
  if (i < 0 || i >= length()) return std::nullopt;
  if ((*this)[i + 1] > (*this)[i] - 1) return std::nullopt;
  std::vector<int> p = parts_;
  --p[i];
  return Partition(std::move(p));
}

std::string Partition::toString() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

std::vector<Partition> partitionsOf(int k) { return partitionsOf(k, k); }

std::vector<Partition> partitionsOf(int k, int maxLength) {
  if (k < 0) throw DomainError("partitionsOf: negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  if (maxLength < 0) maxLength = k;
  generate(k, k, k == 0 ? 0 : maxLength, cur, out);
  return out;
}

const std::vector<Partition>& subpartitionsOf(const Partition& kappa) {
  static PersistentMemo<Partition, std::vector<Partition>> cache;
  return cache.getOrCompute(kappa, [&] {
        std::vector<Partition> out;
        std::vector<int> cur;
        // Depth-first over rows, each row bounded by kappa and the previous row.
        auto rec = [&](auto&& self, int row, int bound) -> void {
          out.emplace_back(cur);
          if (row >= kappa.length()) return;
          for (int p = 1; p <= std::min(bound, kappa[row]); ++p) {
            cur.push_back(p);
            self(self, row + 1, p);
            cur.pop_back();
          }
        };
        rec(rec, 0, kappa.empty() ? 0 : kappa[0]);
        std::sort(out.begin(), out.end());
        return out;
  });
}

bool isSubpartition(const Partition& sigma, const Partition& kappa) {
  if (sigma.length() > kappa.length()) return false;
  for (int i = 0; i < sigma.length(); ++i)
    if (sigma[i] > kappa[i]) return false;
  return true;
}

Comparison compare(const Partition& lambda, const Partition& kappa, Order order) {
  if (order == Order::Lexicographic) {
    if (lambda == kappa) return Comparison::Equal;
    return lambda < kappa ? Comparison::Less : Comparison::Greater;
  }
  if (lambda.weight() != kappa.weight())
    throw DomainError("dominance order compares only partitions of equal weight");
  int sl = 0, sk = 0;
  bool le = true, ge = true;
  int n = std::max(lambda.length(), kappa.length());
  for (int i = 0; i < n; ++i) {
    sl += lambda[i];
    sk += kappa[i];
    if (sl > sk) le = false;
    if (sl < sk) ge = false;
  }
  if (le && ge) return Comparison::Equal;
  if (le) return Comparison::Less;
  if (ge) return Comparison::Greater;
  return Comparison::Incomparable;
}

bool dominatedBy(const Partition& lambda, const Partition& kappa) {
  int sl = 0, sk = 0;
  int n = std::max(lambda.length(), kappa.length());
  for (int i = 0; i < n; ++i) {
    sl += lambda[i];
    sk += kappa[i];
    if (sl > sk) return false;
  }
  return sl == sk;
}

Partition conjugate(const Partition& kappa) {
  std::vector<int> c(kappa.empty() ? 0 : kappa[0], 0);
  for (int i = 0; i < kappa.length(); ++i)
    for (int j = 0; j < kappa[i]; ++j) ++c[j];
  return Partition(std::move(c));
}

namespace {
void checkSquare(const Partition& kappa, Square s) {
  if (s.i < 1 || s.i > kappa.length() || s.j < 1 || s.j > kappa[s.i - 1])
    throw DomainError("square outside the diagram");
}
}  // namespace

int arm(const Partition& kappa, Square s) {
  checkSquare(kappa, s);
  return kappa[s.i - 1] - s.j;
}

int leg(const Partition& kappa, Square s) {
  checkSquare(kappa, s);
  int l = 0;
  for (int r = s.i; r < kappa.length() && kappa[r] >= s.j; ++r) ++l;
  return l;
}

RationalFunction upperHook(const RationalFunction& alpha, const Partition& kappa, Square s) {
  return RationalFunction(leg(kappa, s)) + alpha * RationalFunction(1 + arm(kappa, s));
}

RationalFunction lowerHook(const RationalFunction& alpha, const Partition& kappa, Square s) {
  return RationalFunction(leg(kappa, s) + 1) + alpha * RationalFunction(arm(kappa, s));
}

namespace {
struct AlphaPartitionLess {
  bool operator()(const std::pair<RationalFunction, Partition>& a,
                  const std::pair<RationalFunction, Partition>& b) const {
    RationalFunctionLess lt;
    if (lt(a.first, b.first)) return true;
    if (lt(b.first, a.first)) return false;
    return a.second < b.second;
  }
};
}  // namespace

const HookProducts& hookProducts(const RationalFunction& alpha, const Partition& kappa) {
  static PersistentMemo<std::pair<RationalFunction, Partition>, HookProducts, AlphaPartitionLess> cache;
  return cache.getOrCompute({alpha, kappa}, [&] {
        RationalFunction c(1), cp(1);
        for (int i = 1; i <= kappa.length(); ++i)
          for (int j = 1; j <= kappa[i - 1]; ++j) {
            c *= upperHook(alpha, kappa, {i, j});
            cp *= lowerHook(alpha, kappa, {i, j});
          }
        return HookProducts{c, cp, c * cp};
  });
}

const RationalFunction& checkAlpha(const RationalFunction& alpha) {
  if (alpha.isZero()) throw DomainError("alpha must be nonzero");
  return alpha;
}

RationalFunction rho(const RationalFunction& alpha, const Partition& kappa) {
  checkAlpha(alpha);
  RationalFunction twoOverAlpha = RationalFunction(2) / alpha;
  RationalFunction r;
  for (int i = 0; i < kappa.length(); ++i) {
    int k = kappa[i];
    r += RationalFunction(k) * (RationalFunction(k - 1) - twoOverAlpha * RationalFunction(i));
  }
  return r;
}

}  // namespace mops
