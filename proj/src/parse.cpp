#include "mops/parse.hpp"

#include <cctype>
#include <string>

#include "mops/errors.hpp"

namespace mops {

namespace {

using Kind = ProductExpr::Kind;

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  int offset;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

bool isBasisLetter(const std::string& s) { return s == "m" || s == "p" || s == "C" || s == "J" || s == "P"; }

Basis basisFromLetter(char c) {
  switch (c) {
    case 'm': return Basis::Monomial;
    case 'p': return Basis::PowerSum;
    case 'C': return Basis::JackC;
    case 'J': return Basis::JackJ;
    default: return Basis::JackP;
  }
}

bool isScalarNode(const ProductExpr& e) { return e.root().kind == Kind::Scalar; }
const RationalFunction& scalarOf(const ProductExpr& e) { return e.root().scalar; }

ProductExpr mul(const ProductExpr& a, const ProductExpr& b) {
  if (isScalarNode(a) && isScalarNode(b)) return ProductExpr::scalarValue(scalarOf(a) * scalarOf(b));
  RationalFunction c(1);
  std::vector<ProductExpr> rest;
  for (const ProductExpr* e : {&a, &b}) {
    if (e->root().kind == Kind::Product) {
      for (const auto& ch : e->root().children) {
        if (ch->kind == Kind::Scalar) c *= ch->scalar;
        else rest.emplace_back(ch);
      }
    } else if (isScalarNode(*e)) {
      c *= scalarOf(*e);
    } else {
      rest.push_back(*e);
    }
  }
  if (c.isOne() && rest.size() == 1) return rest.front();
  std::vector<ProductExpr> factors;
  if (!c.isOne()) factors.push_back(ProductExpr::scalarValue(c));
  for (auto& r : rest) factors.push_back(std::move(r));
  return ProductExpr::product(std::move(factors));
}

ProductExpr neg(const ProductExpr& a) { return mul(ProductExpr::scalarValue(RationalFunction(-1)), a); }

ProductExpr add(const ProductExpr& a, const ProductExpr& b) {
  if (isScalarNode(a) && isScalarNode(b)) return ProductExpr::scalarValue(scalarOf(a) + scalarOf(b));
  std::vector<ProductExpr> terms;
  auto push = [&terms](const ProductExpr& t) {
    if (!terms.empty() && isScalarNode(terms.back()) && isScalarNode(t))
      terms.back() = ProductExpr::scalarValue(scalarOf(terms.back()) + scalarOf(t));
    else
      terms.push_back(t);
  };
  for (const ProductExpr* e : {&a, &b}) {
    if (e->root().kind == Kind::Sum)
      for (const auto& ch : e->root().children) push(ProductExpr(ch));
    else
      push(*e);
  }
  if (terms.size() == 1) return terms.front();
  return ProductExpr::sum(std::move(terms));
}

class Parser {
 public:
  Parser(std::string_view text, bool allowBasis) : text_(text), allowBasis_(allowBasis) { advance(); }

  ProductExpr parseAll() {
    ProductExpr e = expr();
    if (cur_.kind != Tok::End) fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
    return e;
  }

 private:
  // Lexer ---------------------------------------------------------------

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    int start = static_cast<int>(pos_);
    if (pos_ >= text_.size()) {
      cur_ = {Tok::End, "", start};
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      if (end + 1 < text_.size() && text_[end] == '.' && std::isdigit(static_cast<unsigned char>(text_[end + 1]))) {
        ++end;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      }
      cur_ = {Tok::Number, std::string(text_.substr(pos_, end - pos_)), start};
      pos_ = end;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
      cur_ = {Tok::Name, std::string(text_.substr(pos_, end - pos_)), start};
      pos_ = end;
      return;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '[': k = Tok::LBracket; break;
      case ']': k = Tok::RBracket; break;
      case ',': k = Tok::Comma; break;
      default:
        cur_ = {Tok::End, std::string(1, c), start};
        failAt(start, "unexpected character '" + std::string(1, c) + "'", {});
    }
    cur_ = {k, std::string(1, c), start};
    ++pos_;
  }

  std::pair<int, int> lineColumn(int offset) const {
    int line = 1, col = 1;
    for (int i = 0; i < offset && i < static_cast<int>(text_.size()); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void failAt(int offset, const std::string& msg, std::vector<std::string> expected) const {
    auto [line, col] = lineColumn(offset);
    std::string full = "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg;
    if (!expected.empty()) {
      full += "; expected one of:";
      for (const auto& e : expected) full += " " + e;
    }
    throw ParseError(full, line, col, std::move(expected));
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    failAt(cur_.offset, "unexpected " + describe(cur_), std::move(expected));
  }

  void expect(Tok k, const char* shown) {
    if (cur_.kind != k) fail({shown});
    advance();
  }

  // Grammar ---------------------------------------------------------------

  std::vector<std::string> operandStart() const {
    std::vector<std::string> v;
    if (allowBasis_) v = {"'m['", "'p['", "'C['", "'J['", "'P['"};
    for (const char* s : {"number", "parameter", "'('", "'-'"}) v.emplace_back(s);
    return v;
  }

  ProductExpr expr() {
    ProductExpr e = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool minus = cur_.kind == Tok::Minus;
      advance();
      ProductExpr t = term();
      e = add(e, minus ? neg(t) : t);
    }
    return e;
  }

  ProductExpr term() {
    ProductExpr e = unary();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      bool divide = cur_.kind == Tok::Slash;
      advance();
      int at = cur_.offset;
      ProductExpr f = unary();
      if (divide) {
        if (!isScalarNode(f)) failAt(at, "divisor contains basis elements", {});
        if (scalarOf(f).isZero()) failAt(at, "division by zero", {});
        f = ProductExpr::scalarValue(scalarOf(f).inverse());
      }
      e = mul(e, f);
    }
    return e;
  }

  ProductExpr unary() {
    if (cur_.kind == Tok::Minus) {
      advance();
      return neg(unary());
    }
    return factor();
  }

  ProductExpr factor() {
    ProductExpr b = base();
    if (cur_.kind != Tok::Caret) return b;
    advance();
    unsigned e = unsignedInt("exponent");
    if (isScalarNode(b)) return ProductExpr::scalarValue(scalarOf(b).pow(static_cast<int>(e)));
    if (e == 0) return ProductExpr::scalarValue(RationalFunction(1));
    if (e == 1) return b;
    return ProductExpr::power(b, e);
  }

  unsigned unsignedInt(const char* what) {
    if (cur_.kind != Tok::Number || cur_.text.find('.') != std::string::npos) fail({std::string("unsigned integer ") + what});
    if (cur_.text.size() > 6) failAt(cur_.offset, std::string(what) + " too large", {});
    unsigned v = static_cast<unsigned>(std::stoul(cur_.text));
    advance();
    return v;
  }

  ProductExpr base() {
    int at = cur_.offset;
    switch (cur_.kind) {
      case Tok::Number: {
        std::string t = cur_.text;
        advance();
        auto dot = t.find('.');
        if (dot == std::string::npos) return ProductExpr::scalarValue(RationalFunction(mpz_class(t, 10)), at);
        std::string digits = t.substr(0, dot) + t.substr(dot + 1);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, t.size() - dot - 1);
        mpq_class q(mpz_class(digits, 10), den);
        q.canonicalize();
        return ProductExpr::scalarValue(RationalFunction(q), at);
      }
      case Tok::Name: {
        std::string name = cur_.text;
        advance();
        if (isBasisLetter(name) && cur_.kind == Tok::LBracket) {
          if (!allowBasis_) failAt(at, "basis element not allowed in a scalar", {});
          return leaf(basisFromLetter(name[0]), at);
        }
        auto p = paramFromName(name);
        if (!p) {
          std::vector<std::string> names;
          for (int i = 0; i < kNumParams; ++i) names.emplace_back(paramName(static_cast<Param>(i)));
          failAt(at, "unknown name '" + name + "'", names);
        }
        return ProductExpr::scalarValue(RationalFunction::param(*p), at);
      }
      case Tok::LParen: {
        advance();
        ProductExpr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      default: fail(operandStart());
    }
  }

  ProductExpr leaf(Basis b, int at) {
    expect(Tok::LBracket, "'['");
    std::vector<int> parts;
    if (cur_.kind != Tok::RBracket) {
      parts.push_back(static_cast<int>(unsignedInt("part")));
      while (cur_.kind == Tok::Comma) {
        advance();
        parts.push_back(static_cast<int>(unsignedInt("part")));
      }
      if (cur_.kind != Tok::RBracket) fail({"','", "']'"});
    }
    advance();
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
        failAt(at, "parts must be positive and non-increasing", {});
    return ProductExpr::leaf(b, Partition(std::move(parts)), at);
  }

  std::string_view text_;
  bool allowBasis_;
  std::size_t pos_ = 0;
  Token cur_{Tok::End, "", 0};
};

}  // namespace

ProductExpr parseExpression(std::string_view text) { return Parser(text, true).parseAll(); }

RationalFunction parseScalar(std::string_view text) {
  ProductExpr e = Parser(text, false).parseAll();
  return e.root().scalar;
}

std::vector<RationalFunction> parseScalarList(std::string_view text) {
  std::vector<RationalFunction> out;
  std::size_t start = 0;
  int depth = 0;
  bool blank = true;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      if (blank && (i < text.size() || !out.empty()))
        throw ParseError("empty entry in list '" + std::string(text) + "'", 1, static_cast<int>(i) + 1);
      if (!blank) out.push_back(parseScalar(text.substr(start, i - start)));
      start = i + 1;
      blank = true;
      continue;
    }
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (!std::isspace(static_cast<unsigned char>(text[i]))) blank = false;
  }
  return out;
}

Partition parsePartition(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  s = first == std::string::npos ? "" : s.substr(first, last - first + 1);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw DomainError("unbalanced brackets in partition '" + s + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  std::size_t start = 0;
  if (s.find_first_not_of(" \t") == std::string::npos) return Partition();
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw DomainError("bad partition '" + std::string(text) + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw DomainError("bad partition '" + std::string(text) + "'");
    parts.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
      throw DomainError("partition '" + std::string(text) + "' must be positive and non-increasing");
  return Partition(std::move(parts));
}

}  // namespace mops
