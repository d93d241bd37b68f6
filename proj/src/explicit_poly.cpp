#include "mops/explicit_poly.hpp"

#include <algorithm>

#include "mops/errors.hpp"

namespace mops {

ExplicitPoly ExplicitPoly::fromSymExpr(const SymExpr& e, int n) {
  if (e.basis() != Basis::Monomial) throw DomainError("explicit expansion expects the monomial basis");
  ExplicitPoly r(n);
  for (const auto& [lambda, c] : e.terms()) {
    if (lambda.length() > n) continue;
    Exps v(n, 0);
    for (int i = 0; i < lambda.length(); ++i) v[i] = lambda[i];
    std::sort(v.begin(), v.end());
    do {
      r.add(v, c);
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return r;
}

SymExpr ExplicitPoly::toSymExpr() const {
  SymExpr out(Basis::Monomial, VarCount::numeric(n_));
  for (const auto& [e, c] : terms_) {
    Exps s = e;
    std::sort(s.begin(), s.end(), std::greater<int>());
    auto it = terms_.find(s);
    if (it == terms_.end() || it->second != c) throw ConsistencyError("explicit polynomial is not symmetric");
    if (s == e) out.add(Partition::fromUnsorted(s), c);
  }
  return out;
}

void ExplicitPoly::add(const Exps& e, const RationalFunction& c) {
  if (c.isZero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

ExplicitPoly ExplicitPoly::operator+(const ExplicitPoly& o) const {
  ExplicitPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, c);
  return r;
}

ExplicitPoly ExplicitPoly::operator-(const ExplicitPoly& o) const {
  ExplicitPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, -c);
  return r;
}

ExplicitPoly ExplicitPoly::scaled(const RationalFunction& c) const {
  ExplicitPoly r(n_);
  for (const auto& [e, v] : terms_) r.add(e, v * c);
  return r;
}

ExplicitPoly ExplicitPoly::derivative(int i) const {
  ExplicitPoly r(n_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exps d = e;
    --d[i];
    r.add(d, c * RationalFunction(e[i]));
  }
  return r;
}

ExplicitPoly ExplicitPoly::timesVar(int i, int power) const {
  ExplicitPoly r(n_);
  for (const auto& [e, c] : terms_) {
    Exps d = e;
    d[i] += power;
    r.add(d, c);
  }
  return r;
}

ExplicitPoly ExplicitPoly::divideByDifference(int i, int j) const {
  ExplicitPoly rem = *this;
  ExplicitPoly q(n_);
  for (;;) {
    int top = 0;
    for (const auto& [e, c] : rem.terms_) top = std::max(top, e[i]);
    if (top == 0) break;
    std::vector<std::pair<Exps, RationalFunction>> lead;
    for (const auto& [e, c] : rem.terms_)
      if (e[i] == top) lead.emplace_back(e, c);
    for (const auto& [e, c] : lead) {
      Exps d = e;
      --d[i];
      q.add(d, c);
      rem.add(e, -c);
      Exps s = d;
      ++s[j];
      rem.add(s, c);
    }
  }
  if (!rem.isZero()) throw ConsistencyError("division by a variable difference left a remainder");
  return q;
}

ExplicitPoly pairOperator(const ExplicitPoly& f, int p) {
  int n = f.nVars();
  std::vector<ExplicitPoly> grad;
  for (int i = 0; i < n; ++i) grad.push_back(f.derivative(i).timesVar(i, p));
  ExplicitPoly r(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) r = r + (grad[i] - grad[j]).divideByDifference(i, j);
  return r;
}

ExplicitPoly secondOrderOperator(const ExplicitPoly& f, int p) {
  ExplicitPoly r(f.nVars());
  for (int i = 0; i < f.nVars(); ++i) r = r + f.derivative(i).derivative(i).timesVar(i, p);
  return r;
}

ExplicitPoly firstOrderOperator(const ExplicitPoly& f, int p) {
  ExplicitPoly r(f.nVars());
  for (int i = 0; i < f.nVars(); ++i) r = r + f.derivative(i).timesVar(i, p);
  return r;
}

}  // namespace mops
