#ifndef MOPS_EXPLICIT_POLY_HPP
#define MOPS_EXPLICIT_POLY_HPP

#include <map>
#include <vector>

#include "mops/scalar.hpp"
#include "mops/symfun.hpp"

namespace mops {

// Polynomial in explicit variables x_1..x_n with rational-function
// coefficients. Used to apply differential operators for verification.
class ExplicitPoly {
 public:
  using Exps = std::vector<int>;

  explicit ExplicitPoly(int n) : n_(n) {}

  static ExplicitPoly fromSymExpr(const SymExpr& monomialExpr, int n);
  // Collects into monomials; throws ConsistencyError if not symmetric.
  SymExpr toSymExpr() const;

  int nVars() const { return n_; }
  const std::map<Exps, RationalFunction>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  void add(const Exps& e, const RationalFunction& c);
  ExplicitPoly operator+(const ExplicitPoly& o) const;
  ExplicitPoly operator-(const ExplicitPoly& o) const;
  ExplicitPoly scaled(const RationalFunction& c) const;

  ExplicitPoly derivative(int i) const;           // d/dx_i, 0-based
  ExplicitPoly timesVar(int i, int power) const;  // x_i^power * f
  // Exact quotient by (x_i - x_j); throws ConsistencyError on a remainder.
  ExplicitPoly divideByDifference(int i, int j) const;

 private:
  int n_;
  std::map<Exps, RationalFunction> terms_;
};

// sum_{i<j} (x_i^p f_i - x_j^p f_j)/(x_i - x_j), f_i = df/dx_i.
ExplicitPoly pairOperator(const ExplicitPoly& f, int p);
// sum_i x_i^p d^2f/dx_i^2
ExplicitPoly secondOrderOperator(const ExplicitPoly& f, int p);
// sum_i x_i^p df/dx_i  (p=1: Euler operator E, p=0: epsilon)
ExplicitPoly firstOrderOperator(const ExplicitPoly& f, int p);

}  // namespace mops

#endif
