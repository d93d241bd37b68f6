#include "mops/format.hpp"

#include <charconv>
#include <cmath>
#include <regex>

namespace mops {

namespace {

using Kind = ProductExpr::Kind;
using Node = ProductExpr::Node;

bool atomText(const std::string& s) {
  static const std::regex atom("[0-9]+|[a-z][a-z0-9]*");
  return std::regex_match(s, atom);
}

std::string bare(const RationalFunction& c) {
  std::string s = c.toString();
  return atomText(s) ? s : "(" + s + ")";
}

std::string signedScalar(const RationalFunction& c) {
  return c.displayNegative() ? "-" + bare(-c) : bare(c);
}

std::string leafText(const Node& n) {
  return std::string(basisLetter(n.basis)) + "[" + n.partition.toString() + "]";
}

std::string fmt(const Node& n);

std::string factorText(const Node& n) {
  if (n.kind == Kind::Sum || n.kind == Kind::Product) return "(" + fmt(n) + ")";
  return fmt(n);
}

std::string fmt(const Node& n) {
  switch (n.kind) {
    case Kind::Scalar: return signedScalar(n.scalar);
    case Kind::Leaf: return leafText(n);
    case Kind::Power: {
      const Node& b = *n.children.at(0);
      std::string s = b.kind == Kind::Leaf ? leafText(b) : "(" + fmt(b) + ")";
      return s + "^" + std::to_string(n.exponent);
    }
    case Kind::Product: {
      std::string out;
      bool first = true;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        const Node& c = *n.children[i];
        if (i == 0 && c.kind == Kind::Scalar && n.children.size() > 1) {
          if (c.scalar == RationalFunction(-1)) {
            out = "-";
            continue;
          }
          out = signedScalar(c.scalar);
          first = false;
          continue;
        }
        if (!first) out += "*";
        out += factorText(c);
        first = false;
      }
      return out;
    }
    case Kind::Sum: {
      if (n.children.empty()) return "0";
      std::string out;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        std::string s = fmt(*n.children[i]);
        if (i == 0) out = s;
        else if (s.front() == '-') out += " - " + s.substr(1);
        else out += " + " + s;
      }
      return out;
    }
  }
  return "";
}

}  // namespace

std::string formatExpression(const ProductExpr& e) { return fmt(e.root()); }

nlohmann::ordered_json symExprJson(const SymExpr& e) {
  nlohmann::ordered_json j;
  j["basis"] = std::string(basisName(e.basis()));
  j["varMode"] = e.vars().isGeneric() ? "generic" : "numeric";
  if (!e.vars().isGeneric()) j["nVars"] = e.vars().value();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [part, coef] : e.terms()) {
    nlohmann::ordered_json t;
    t["partition"] = part.parts();
    t["coeff"] = coef.toString();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

std::string formatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void writeCsv(std::ostream& os, const std::vector<std::string>& header,
              const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << formatDouble(row[i]);
    os << "\n";
  }
}

}  // namespace mops
