#ifndef MOPS_SYMFUN_HPP
#define MOPS_SYMFUN_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mops/partition.hpp"
#include "mops/scalar.hpp"

namespace mops {

enum class Basis { Monomial, PowerSum, JackC, JackJ, JackP };

std::string_view basisLetter(Basis b);  // m, p, C, J, P
std::string_view basisName(Basis b);    // monomial, powerSum, jackC, jackJ, jackP
bool isJackBasis(Basis b);

// Number of variables: a fixed count, or generic (symbolic n, no truncation).
class VarCount {
 public:
  static VarCount generic() { return VarCount(-1); }
  static VarCount numeric(int n);
  bool isGeneric() const { return n_ < 0; }
  int value() const;
  // n as a scalar: the parameter n when generic.
  RationalFunction asScalar() const;
  bool admits(const Partition& p) const { return isGeneric() || p.length() <= n_; }
  std::string toString() const;
  bool operator==(const VarCount& o) const = default;

 private:
  explicit VarCount(int n) : n_(n) {}
  int n_;
};

using TermMap = std::map<Partition, RationalFunction, PartitionDesc>;

// Linear combination of one basis, terms in decreasing lexicographic order.
class SymExpr {
 public:
  SymExpr(Basis basis, VarCount vars) : basis_(basis), vars_(vars) {}

  Basis basis() const { return basis_; }
  VarCount vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  // Adds c to the coefficient of p; drops partitions the variable count
  // does not admit and zero results.
  void add(const Partition& p, const RationalFunction& c);
  void addScaled(const SymExpr& other, const RationalFunction& c);
  RationalFunction coefficient(const Partition& p) const;
  SymExpr scaled(const RationalFunction& c) const;
  SymExpr withVars(VarCount vars) const;  // re-truncates

  SymExpr operator+(const SymExpr& o) const;
  SymExpr operator-(const SymExpr& o) const;
  bool operator==(const SymExpr& o) const {
    return basis_ == o.basis_ && vars_ == o.vars_ && terms_ == o.terms_;
  }

  std::string toString() const;

 private:
  Basis basis_;
  VarCount vars_;
  TermMap terms_;
};

// Tree of sums, products and powers over basis elements and scalars.
class ProductExpr {
 public:
  enum class Kind { Sum, Product, Power, Leaf, Scalar };
  struct Node {
    Kind kind;
    std::vector<std::shared_ptr<const Node>> children;
    unsigned exponent = 1;
    Basis basis = Basis::Monomial;
    Partition partition;
    RationalFunction scalar;
    int position = 0;  // source offset for parsed input
  };
  using NodePtr = std::shared_ptr<const Node>;

  ProductExpr() : ProductExpr(scalarValue(RationalFunction())) {}
  explicit ProductExpr(NodePtr root) : root_(std::move(root)) {}

  static ProductExpr leaf(Basis b, Partition p, int position = 0);
  static ProductExpr scalarValue(RationalFunction c, int position = 0);
  static ProductExpr sum(std::vector<ProductExpr> terms);
  static ProductExpr product(std::vector<ProductExpr> factors);
  static ProductExpr power(ProductExpr base, unsigned exponent);
  static ProductExpr fromSymExpr(const SymExpr& e);

  const Node& root() const { return *root_; }
  const NodePtr& node() const { return root_; }

  // True when some product or power multiplies two non-scalar factors.
  bool hasProducts() const;
  std::vector<Basis> leafBases() const;
  // Value if the tree contains no basis leaves.
  std::optional<RationalFunction> scalarOnly() const;

  ProductExpr operator+(const ProductExpr& o) const { return sum({*this, o}); }
  ProductExpr operator*(const ProductExpr& o) const { return product({*this, o}); }

 private:
  NodePtr root_;
};

ProductExpr m(Partition p);
ProductExpr p(Partition p);
ProductExpr C(Partition p);
ProductExpr J(Partition p);
ProductExpr P(Partition p);
ProductExpr scalar(const RationalFunction& c);

// Products of monomial leaves, flattened to the monomial basis.
SymExpr m2m(const ProductExpr& e, VarCount vars);
// Monomial expression to power sums (independent of n for n >= weight).
SymExpr m2p(const ProductExpr& e);
// Power-sum expression to monomials.
SymExpr p2m(const ProductExpr& e, VarCount vars);
// Monomial expression to Jack C basis by the triangular sweep.
SymExpr m2jack(const RationalFunction& alpha, const SymExpr& e, VarCount vars);
// Any Jack (or monomial/power-sum) leaves, products allowed for numeric n.
SymExpr jack2jack(const RationalFunction& alpha, const ProductExpr& e, VarCount vars);
// Expression whose leaves all share one basis and that has no products.
SymExpr linearCombination(const ProductExpr& e, VarCount vars);
// Any expression (single-basis SymExpr) to the monomial basis.
SymExpr toMonomial(const RationalFunction& alpha, const SymExpr& e);

RationalFunction alphaInnerProduct(const SymExpr& f, const SymExpr& g, const RationalFunction& alpha);

// Evaluation at a point; alpha is needed only for Jack bases. Coefficients
// must be free of parameters after alpha is used.
mpq_class evalExact(const SymExpr& e, const std::vector<mpq_class>& xs,
                    const std::optional<RationalFunction>& alpha = std::nullopt);
double evalNumeric(const SymExpr& e, const std::vector<double>& xs,
                   const std::optional<RationalFunction>& alpha = std::nullopt);
// m_lambda at a point, summing over distinct arrangements.
mpq_class monomialValue(const Partition& lambda, const std::vector<mpq_class>& xs);

// m_lambda * m_mu (cached); generic mode uses the stable coefficients.
const TermMap& monomialProduct(const Partition& lambda, const Partition& mu, VarCount vars);
// p_lambda in the monomial basis, generic (cached).
const TermMap& powerSumToMonomial(const Partition& lambda);

// z_lambda = prod_i a_i! i^{a_i}
mpz_class zee(const Partition& lambda);

}  // namespace mops

#endif
