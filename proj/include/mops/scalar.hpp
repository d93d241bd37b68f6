#ifndef MOPS_SCALAR_HPP
#define MOPS_SCALAR_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mops {

// Fixed parameter set, listed in decreasing variable order.
enum class Param : int { Alpha = 0, N = 1, Gamma = 2, G1 = 3, G2 = 4, R = 5 };
inline constexpr int kNumParams = 6;

std::string_view paramName(Param p);
std::optional<Param> paramFromName(std::string_view name);

using Exponents = std::array<int, kNumParams>;
using Bindings = std::map<Param, mpq_class>;

// Sparse polynomial over Z in the fixed parameters. Terms are kept sorted by
// decreasing lexicographic monomial order (alpha most significant).
class Polynomial {
 public:
  struct Term {
    std::uint64_t mono;
    mpz_class coef;
  };

  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const mpz_class& c);

  static Polynomial variable(Param p, int power = 1);
  static Polynomial monomial(const Exponents& e, const mpz_class& c);

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  bool isOne() const;
  mpz_class constantValue() const;
  int degree(Param p) const;
  bool dependsOn(Param p) const { return degree(p) > 0; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const mpz_class& leadingCoefficient() const { return terms_.front().coef; }

  // Positive gcd of the integer coefficients (0 for the zero polynomial).
  mpz_class content() const;

  // Coefficients with respect to p: result[e] multiplies p^e.
  std::vector<Polynomial> coefficientsIn(Param p) const;
  Polynomial coefficientIn(Param p, int power) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const mpz_class& c) const;
  Polynomial shifted(Param p, int power) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Exact division; returns nullopt when divisor does not divide *this.
  std::optional<Polynomial> divideExact(const Polynomial& divisor) const;
  Polynomial divExact(const Polynomial& divisor) const;
  Polynomial divScalarExact(const mpz_class& c) const;

  // Clears denominators: returns (P, d) with substitute(*this) = P / d, d > 0.
  std::pair<Polynomial, mpz_class> substitute(const Bindings& b) const;

  std::string toString() const;
  std::size_t approxBytes() const { return 48 * terms_.size() + 32; }

  static Polynomial fromTerms(std::vector<Term> terms);  // sorts and merges

 private:
  std::vector<Term> terms_;
};

// Greatest common divisor with positive leading coefficient, including the
// integer content.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct LimitResult;

// Exact ratio of polynomials, kept coprime with positive leading denominator
// coefficient.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT
  explicit RationalFunction(const mpz_class& c) : num_(c), den_(1) {}
  explicit RationalFunction(const mpq_class& q);
  explicit RationalFunction(const Polynomial& p) : num_(p), den_(1) {}
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction param(Param p) { return RationalFunction(Polynomial::variable(p)); }
  static RationalFunction fraction(long num, long den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool isZero() const { return num_.isZero(); }
  bool isOne() const { return num_.isOne() && den_.isOne(); }
  bool isConstant() const { return num_.isConstant() && den_.isConstant(); }
  bool isPolynomial() const { return den_.isConstant(); }
  bool dependsOn(Param p) const { return num_.dependsOn(p) || den_.dependsOn(p); }
  std::vector<Param> freeParams() const;
  mpq_class constantValue() const;  // throws DomainError if not constant
  double toDouble() const;          // requires a constant

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction substitute(const Bindings& b) const;
  std::vector<RationalFunction> seriesCoefficients(Param p, int degree) const;
  LimitResult limitAtInfinity(Param p) const;

  // Sign of a constant; for a non-constant value, the sign of its numerator's
  // leading coefficient (used only for display).
  bool displayNegative() const { return !num_.isZero() && num_.leadingCoefficient() < 0; }

  std::string toString() const;
  std::size_t approxBytes() const { return num_.approxBytes() + den_.approxBytes(); }

 private:
  static RationalFunction fromCoprime(Polynomial num, Polynomial den);
  void normalizeSign();

  Polynomial num_;
  Polynomial den_;
};

struct LimitResult {
  enum class Kind { Finite, PlusInfinity, MinusInfinity, Infinity };
  Kind kind;
  // Finite: the limit. Infinite kinds: the leading ratio whose sign is the
  // direction (Kind::Infinity when that sign depends on other parameters).
  RationalFunction value;
};

RationalFunction operator+(long a, const RationalFunction& b);
RationalFunction operator-(long a, const RationalFunction& b);
RationalFunction operator*(long a, const RationalFunction& b);
RationalFunction operator/(long a, const RationalFunction& b);

// Ordering by canonical text; used for cache keys.
struct RationalFunctionLess {
  bool operator()(const RationalFunction& a, const RationalFunction& b) const;
};

}  // namespace mops

#endif
