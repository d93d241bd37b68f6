#include "mops/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mops/binom.hpp"
#include "mops/cache.hpp"
#include "mops/errors.hpp"
#include "mops/expect.hpp"
#include "mops/format.hpp"
#include "mops/hypergeom.hpp"
#include "mops/jack.hpp"
#include "mops/orthopoly.hpp"
#include "mops/parse.hpp"

namespace mops {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct Config {
  std::optional<std::size_t> cacheMB;
  std::optional<int> defaultLimit;
};

Config readConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file '" + path + "'");
  Config cfg;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw DomainError(path + ":" + std::to_string(lineNo) + ": expected key=value");
    auto trim = [](std::string s) {
      auto a = s.find_first_not_of(" \t\r");
      auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    try {
      std::size_t used = 0;
      long v = std::stol(value, &used);
      if (used != value.size() || v < 0) throw std::invalid_argument("bad");
      if (key == "cache_mb") cfg.cacheMB = static_cast<std::size_t>(v);
      else if (key == "default_limit") cfg.defaultLimit = static_cast<int>(v);
      else throw DomainError(path + ":" + std::to_string(lineNo) + ": unknown key '" + key + "'");
    } catch (const std::logic_error&) {
      throw DomainError(path + ":" + std::to_string(lineNo) + ": '" + value + "' is not a non-negative integer");
    }
  }
  return cfg;
}

VarCount parseVars(const std::string& s) {
  if (s == "n" || s == "generic") return VarCount::generic();
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw DomainError("--vars must be a count or 'n', got '" + s + "'");
  return VarCount::numeric(v);
}

Normalization parseNorm(const std::string& s) {
  if (s == "C") return Normalization::C;
  if (s == "J") return Normalization::J;
  if (s == "P") return Normalization::P;
  throw DomainError("normalization must be C, J or P, got '" + s + "'");
}

Basis parseBasis(const std::string& s) {
  static const std::map<std::string, Basis> names = {
      {"m", Basis::Monomial}, {"monomial", Basis::Monomial}, {"p", Basis::PowerSum}, {"powerSum", Basis::PowerSum},
      {"C", Basis::JackC},    {"jackC", Basis::JackC},       {"J", Basis::JackJ},    {"jackJ", Basis::JackJ},
      {"P", Basis::JackP},    {"jackP", Basis::JackP}};
  auto it = names.find(s);
  if (it == names.end()) throw DomainError("unknown basis '" + s + "'");
  return it->second;
}

struct Grid {
  double from, to;
  int count;
  std::vector<double> points() const {
    std::vector<double> xs;
    for (int i = 0; i < count; ++i) xs.push_back(count == 1 ? from : from + (to - from) * i / (count - 1));
    return xs;
  }
};

Grid parseGrid(const std::string& s) {
  auto c1 = s.find(':');
  auto c2 = c1 == std::string::npos ? std::string::npos : s.find(':', c1 + 1);
  if (c2 == std::string::npos) throw DomainError("--grid must be from:to:count, got '" + s + "'");
  Grid g;
  try {
    std::size_t u1 = 0, u2 = 0, u3 = 0;
    std::string a = s.substr(0, c1), b = s.substr(c1 + 1, c2 - c1 - 1), c = s.substr(c2 + 1);
    g.from = std::stod(a, &u1);
    g.to = std::stod(b, &u2);
    g.count = std::stoi(c, &u3);
    if (u1 != a.size() || u2 != b.size() || u3 != c.size()) throw std::invalid_argument("bad");
  } catch (const std::logic_error&) {
    throw DomainError("--grid must be from:to:count, got '" + s + "'");
  }
  if (g.count < 1 || g.count > 10000000) throw DomainError("grid count must be between 1 and 10^7");
  return g;
}

Json scalarJson(const RationalFunction& v) {
  Json j;
  j["value"] = v.toString();
  if (v.isConstant()) j["numeric"] = v.toDouble();
  else j["numeric"] = nullptr;
  return j;
}

// c_0 + c_1*x + ... with zero coefficients left out.
std::string polyInX(const std::vector<RationalFunction>& coeffs) {
  std::string out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const RationalFunction& c = coeffs[j];
    if (c.isZero()) continue;
    bool neg = c.displayNegative();
    RationalFunction a = neg ? -c : c;
    std::string mono = j == 0 ? "" : j == 1 ? "x" : "x^" + std::to_string(j);
    std::string s = a.toString();
    if (a.isPolynomial() && a.numerator().size() > 1) s = "(" + s + ")";
    std::string term = mono.empty() ? s : a.isOne() ? mono : s + "*" + mono;
    if (out.empty()) out = (neg ? "-" : "") + term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Jack polynomials, multivariate orthogonal polynomials and hypergeometric functions", "mops"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string configPath;
    std::optional<std::size_t> cacheMB;
    app.add_option("--config", configPath, "key=value file with cache_mb and default_limit");
    app.add_option("--cache-mb", cacheMB, "memory cap for memo caches in MB");

    std::function<void()> action;
    std::string format = "text";
    setup(app, action, format);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) return app.exit(e, out_, err_);
      err_ << "error: " << e.what() << "\n";
      return 2;
    }

    try {
      if (!configPath.empty()) {
        config_ = readConfig(configPath);
        if (config_.cacheMB && !std::getenv("MOPS_CACHE_MB")) CacheBudget::setLimitMB(*config_.cacheMB);
      }
      if (cacheMB) CacheBudget::setLimitMB(*cacheMB);
      if (format == "text") format_ = Format::Text;
      else if (format == "json") format_ = Format::Json;
      else format_ = Format::Csv;
      action();
      return 0;
    } catch (const ConvergenceError& e) {
      err_ << "error: " << e.what() << " (partial value " << formatDouble(e.partialValue()) << ")\n";
      return 3;
    } catch (const PoleError& e) {
      err_ << "error: " << e.what() << "\n";
      return 3;
    } catch (const DomainError& e) {
      err_ << "error: " << e.what() << "\n";
      return 2;
    } catch (const ConsistencyError& e) {
      err_ << "internal error: " << e.what() << "\n";
      return 1;
    } catch (const std::exception& e) {
      err_ << "internal error: " << e.what() << "\n";
      return 1;
    }
  }

 private:
  void requireNoCsv() const {
    if (format_ == Format::Csv) throw DomainError("csv output is only available for density grids");
  }

  void emitExpr(const std::string& command, const Json& input, const SymExpr& e) {
    requireNoCsv();
    if (format_ == Format::Text) {
      out_ << e.toString() << "\n";
      return;
    }
    Json j;
    j["command"] = command;
    j["input"] = input;
    j["result"] = symExprJson(e);
    out_ << j.dump(2) << "\n";
  }

  void emitScalar(const std::string& command, const Json& input, const RationalFunction& v) {
    requireNoCsv();
    if (format_ == Format::Text) {
      out_ << v.toString() << "\n";
      return;
    }
    Json j;
    j["command"] = command;
    j["input"] = input;
    j["result"] = scalarJson(v);
    out_ << j.dump(2) << "\n";
  }

  void addFormat(CLI::App* sub, std::string& format, bool csv) {
    std::vector<std::string> allowed = {"text", "json"};
    if (csv) allowed.push_back("csv");
    sub->add_option(csv ? "--format,--out" : "--format", format, "output format")
        ->check(CLI::IsMember(allowed));
  }

  void setup(CLI::App& app, std::function<void()>& action, std::string& format) {
    // jack ------------------------------------------------------------------
    {
      auto* sub = app.add_subcommand("jack", "Jack polynomial in the monomial basis");
      auto o = std::make_shared<std::map<std::string, std::string>>();
      (*o)["alpha"] = "a";
      (*o)["vars"] = "n";
      (*o)["norm"] = "J";
      sub->add_option("--alpha", (*o)["alpha"], "Jack parameter (number or a)");
      sub->add_option("--partition", (*o)["partition"], "partition, e.g. 3,1")->required();
      sub->add_option("--vars", (*o)["vars"], "number of variables or n");
      sub->add_option("--norm", (*o)["norm"], "C, J or P");
      addFormat(sub, format, false);
      sub->callback([this, o, &action] {
        action = [this, o] {
          RationalFunction alpha = parseScalar((*o)["alpha"]);
          Partition kappa = parsePartition((*o)["partition"]);
          VarCount vars = parseVars((*o)["vars"]);
          Normalization norm = parseNorm((*o)["norm"]);
          SymExpr e = jackExpand(alpha, kappa, norm, vars);
          Json in;
          in["alpha"] = alpha.toString();
          in["partition"] = kappa.parts();
          in["vars"] = vars.toString();
          in["norm"] = (*o)["norm"];
          emitExpr("jack", in, e);
        };
      });
    }

    // hermite / laguerre / jacobi --------------------------------------------
    for (Family fam : {Family::Hermite, Family::Laguerre, Family::Jacobi}) {
      std::string name(familyName(fam));
      std::transform(name.begin(), name.end(), name.begin(), ::tolower);
      auto* sub = app.add_subcommand(name, "multivariate " + name + " polynomial");
      auto o = std::make_shared<std::map<std::string, std::string>>();
      (*o)["alpha"] = "a";
      (*o)["vars"] = "n";
      (*o)["basis"] = "C";
      sub->add_option("--alpha", (*o)["alpha"], "Jack parameter");
      sub->add_option("--partition", (*o)["partition"], "partition")->required();
      sub->add_option("--vars", (*o)["vars"], "number of variables or n");
      sub->add_option("--basis", (*o)["basis"], "output basis: C or m")->check(CLI::IsMember({"C", "m"}));
      if (fam == Family::Hermite) {
        (*o)["method"] = "recurrence";
        sub->add_option("--method", (*o)["method"], "recurrence or limit")
            ->check(CLI::IsMember({"recurrence", "limit"}));
      }
      if (fam == Family::Laguerre) {
        (*o)["gamma"] = "g";
        sub->add_option("--gamma", (*o)["gamma"], "Laguerre parameter");
      }
      if (fam == Family::Jacobi) {
        (*o)["g1"] = "g1";
        (*o)["g2"] = "g2";
        sub->add_option("--g1", (*o)["g1"], "first Jacobi parameter");
        sub->add_option("--g2", (*o)["g2"], "second Jacobi parameter");
      }
      addFormat(sub, format, false);
      sub->callback([this, o, fam, name, &action] {
        action = [this, o, fam, name] {
          RationalFunction alpha = parseScalar((*o)["alpha"]);
          Partition kappa = parsePartition((*o)["partition"]);
          VarCount vars = parseVars((*o)["vars"]);
          Json in;
          in["alpha"] = alpha.toString();
          in["partition"] = kappa.parts();
          in["vars"] = vars.toString();
          OrthoExpansion e;
          switch (fam) {
            case Family::Hermite:
              e = (*o)["method"] == "limit" ? hermite2(alpha, kappa, vars) : hermite(alpha, kappa, vars);
              in["method"] = (*o)["method"];
              break;
            case Family::Laguerre: {
              RationalFunction g = parseScalar((*o)["gamma"]);
              in["gamma"] = g.toString();
              e = laguerre(alpha, kappa, g, vars);
              break;
            }
            case Family::Jacobi: {
              RationalFunction g1 = parseScalar((*o)["g1"]), g2 = parseScalar((*o)["g2"]);
              in["g1"] = g1.toString();
              in["g2"] = g2.toString();
              e = jacobi(alpha, kappa, g1, g2, vars);
              break;
            }
          }
          in["basis"] = (*o)["basis"];
          emitExpr(name, in, (*o)["basis"] == "m" ? e.asMonomial() : e.asJackC());
        };
      });
    }

    // gbinomial --------------------------------------------------------------
    {
      auto* sub = app.add_subcommand("gbinomial", "generalized binomial coefficient");
      auto o = std::make_shared<std::map<std::string, std::string>>();
      (*o)["alpha"] = "a";
      sub->add_option("--alpha", (*o)["alpha"], "Jack parameter");
      sub->add_option("--kappa", (*o)["kappa"], "upper partition")->required();
      sub->add_option("--sigma", (*o)["sigma"], "lower partition")->required();
      addFormat(sub, format, false);
      sub->callback([this, o, &action] {
        action = [this, o] {
          RationalFunction alpha = parseScalar((*o)["alpha"]);
          Partition kappa = parsePartition((*o)["kappa"]), sigma = parsePartition((*o)["sigma"]);
          Json in;
          in["alpha"] = alpha.toString();
          in["kappa"] = kappa.parts();
          in["sigma"] = sigma.parts();
          emitScalar("gbinomial", in, gbinomial(alpha, kappa, sigma));
        };
      });
    }

    // gsfact -----------------------------------------------------------------
    {
      auto* sub = app.add_subcommand("gsfact", "generalized Pochhammer symbol");
      auto o = std::make_shared<std::map<std::string, std::string>>();
      (*o)["alpha"] = "a";
      (*o)["r"] = "r";
      sub->add_option("--alpha", (*o)["alpha"], "Jack parameter");
      sub->add_option("--r", (*o)["r"], "base of the symbol");
      sub->add_option("--partition", (*o)["partition"], "partition")->required();
      addFormat(sub, format, false);
      sub->callback([this, o, &action] {
        action = [this, o] {
          RationalFunction alpha = parseScalar((*o)["alpha"]), r = parseScalar((*o)["r"]);
          Partition kappa = parsePartition((*o)["partition"]);
          Json in;
          in["alpha"] = alpha.toString();
          in["r"] = r.toString();
          in["partition"] = kappa.parts();
          emitScalar("gsfact", in, gsfact(alpha, r, kappa));
        };
      });
    }

    // hypergeom --------------------------------------------------------------
    {
      auto* sub = app.add_subcommand("hypergeom", "hypergeometric function of matrix argument");
      auto o = std::make_shared<std::map<std::string, std::string>>();
      auto limit = std::make_shared<std::optional<int>>();
      auto tol = std::make_shared<std::optional<double>>();
      auto cap = std::make_shared<int>(400);
      (*o)["alpha"] = "a";
      sub->add_option("--alpha", (*o)["alpha"], "Jack parameter");
      sub->add_option("--upper", (*o)["upper"], "comma separated upper parameters")->required();
      sub->add_option("--lower", (*o)["lower"], "comma separated lower parameters");
      auto* xid = sub->add_option("--xid", (*o)["xid"], "value:m for value times the m by m identity");
      auto* xs = sub->add_option("--x", (*o)["x"], "comma separated point");
      xid->excludes(xs);
      sub->add_option("--limit", *limit, "largest total degree");
      sub->add_option("--tol", *tol, "relative tolerance on a layer");
      sub->add_option("--degree-cap", *cap, "degree cap in tolerance mode");
      addFormat(sub, format, false);
      sub->callback([this, o, limit, tol, cap, &action] {
        action = [this, o, limit, tol, cap] { runHypergeom(*o, *limit, *tol, *cap); };
      });
    }

    // convert ----------------------------------------------------------------
    {
      auto* sub = app.add_subcommand("convert", "expression to a single basis");
      auto o = std::make_shared<std::map<std::string, std::string>>();
      (*o)["alpha"] = "a";
      (*o)["vars"] = "n";
      sub->add_option("--alpha", (*o)["alpha"], "Jack parameter");
      sub->add_option("--vars", (*o)["vars"], "number of variables or n");
      sub->add_option("--expr", (*o)["expr"], "expression")->required();
      sub->add_option("--to", (*o)["to"], "target basis: m, p, C, J or P")->required();
      addFormat(sub, format, false);
      sub->callback([this, o, &action] {
        action = [this, o] {
          RationalFunction alpha = parseScalar((*o)["alpha"]);
          VarCount vars = parseVars((*o)["vars"]);
          ProductExpr e = parseExpression((*o)["expr"]);
          Basis to = parseBasis((*o)["to"]);
          Json in;
          in["alpha"] = alpha.toString();
          in["vars"] = vars.toString();
          in["expr"] = formatExpression(e);
          in["to"] = std::string(basisLetter(to));
          emitExpr("convert", in, convertTo(alpha, e, to, vars));
        };
      });
    }

    // expect -----------------------------------------------------------------
    {
      auto* sub = app.add_subcommand("expect", "ensemble expectation of an expression");
      auto o = std::make_shared<std::map<std::string, std::string>>();
      (*o)["alpha"] = "a";
      (*o)["vars"] = "n";
      (*o)["gamma"] = "g";
      (*o)["g1"] = "g1";
      (*o)["g2"] = "g2";
      sub->add_option("--ensemble", (*o)["ensemble"], "hermite, laguerre or jacobi")
          ->required()
          ->check(CLI::IsMember({"hermite", "laguerre", "jacobi"}));
      sub->add_option("--alpha", (*o)["alpha"], "Jack parameter");
      sub->add_option("--vars", (*o)["vars"], "number of variables or n");
      sub->add_option("--gamma", (*o)["gamma"], "Laguerre parameter");
      sub->add_option("--g1", (*o)["g1"], "first Jacobi parameter");
      sub->add_option("--g2", (*o)["g2"], "second Jacobi parameter");
      sub->add_option("--expr", (*o)["expr"], "expression")->required();
      addFormat(sub, format, false);
      sub->callback([this, o, &action] {
        action = [this, o] {
          RationalFunction alpha = parseScalar((*o)["alpha"]);
          VarCount vars = parseVars((*o)["vars"]);
          ProductExpr e = parseExpression((*o)["expr"]);
          const std::string& fam = (*o)["ensemble"];
          Json in;
          in["ensemble"] = fam;
          in["alpha"] = alpha.toString();
          in["vars"] = vars.toString();
          Ensemble ens;
          if (fam == "hermite") {
            ens = Ensemble::hermite(alpha, vars);
          } else if (fam == "laguerre") {
            RationalFunction g = parseScalar((*o)["gamma"]);
            in["gamma"] = g.toString();
            ens = Ensemble::laguerre(alpha, g, vars);
          } else {
            RationalFunction g1 = parseScalar((*o)["g1"]), g2 = parseScalar((*o)["g2"]);
            in["g1"] = g1.toString();
            in["g2"] = g2.toString();
            ens = Ensemble::jacobi(alpha, g1, g2, vars);
          }
          in["expr"] = formatExpression(e);
          auto bases = e.leafBases();
          bool monomialOnly = !bases.empty() && std::all_of(bases.begin(), bases.end(),
                                                            [](Basis b) { return b == Basis::Monomial; });
          RationalFunction v = monomialOnly ? expectMonomialExpr(ens, e) : expectJackExpr(ens, e);
          emitScalar("expect", in, v);
        };
      });
    }

    // density ----------------------------------------------------------------
    {
      auto* dens = app.add_subcommand("density", "eigenvalue densities on a grid");
      dens->require_subcommand(1);

      auto* sm = dens->add_subcommand("smallest", "smallest eigenvalue density of the Laguerre ensemble");
      auto so = std::make_shared<std::map<std::string, std::string>>();
      auto sp = std::make_shared<int>(0), smm = std::make_shared<int>(0);
      auto snorm = std::make_shared<bool>(false);
      sm->add_option("--alpha", (*so)["alpha"], "Jack parameter")->required();
      sm->add_option("--p", *sp, "nonnegative integer p")->required();
      sm->add_option("--m", *smm, "matrix size")->required();
      sm->add_option("--grid", (*so)["grid"], "from:to:count");
      sm->add_flag("--normalize", *snorm, "scale to unit mass numerically");
      addFormat(sm, format, true);
      sm->callback([this, so, sp, smm, snorm, &action] {
        action = [this, so, sp, smm, snorm] { runSmallest(*so, *sp, *smm, *snorm); };
      });

      auto* lv = dens->add_subcommand("level", "level density of the Hermite ensemble");
      auto lo = std::make_shared<std::map<std::string, std::string>>();
      auto lbeta = std::make_shared<int>(0), ln = std::make_shared<int>(0);
      auto lscaled = std::make_shared<bool>(false);
      lv->add_option("--beta", *lbeta, "even beta")->required();
      lv->add_option("--n", *ln, "number of eigenvalues")->required();
      lv->add_option("--grid", (*lo)["grid"], "from:to:count");
      lv->add_flag("--scaled", *lscaled, "x scaled by sqrt(2 n beta)");
      addFormat(lv, format, true);
      lv->callback([this, lo, lbeta, ln, lscaled, &action] {
        action = [this, lo, lbeta, ln, lscaled] { runLevel(*lo, *lbeta, *ln, *lscaled); };
      });

      auto* lg = dens->add_subcommand("largest", "largest eigenvalue distribution of the Laguerre ensemble");
      auto go = std::make_shared<std::map<std::string, std::string>>();
      auto gm = std::make_shared<int>(0);
      auto gtol = std::make_shared<double>(1e-10);
      lg->add_option("--alpha", (*go)["alpha"], "Jack parameter")->required();
      lg->add_option("--gamma", (*go)["gamma"], "Laguerre parameter")->required();
      lg->add_option("--m", *gm, "matrix size")->required();
      lg->add_option("--grid", (*go)["grid"], "from:to:count")->required();
      lg->add_option("--tol", *gtol, "series tolerance");
      addFormat(lg, format, true);
      lg->callback([this, go, gm, gtol, &action] {
        action = [this, go, gm, gtol] { runLargest(*go, *gm, *gtol); };
      });
    }

    // eval -------------------------------------------------------------------
    {
      auto* sub = app.add_subcommand("eval", "exact value of an expression at a point");
      auto o = std::make_shared<std::map<std::string, std::string>>();
      (*o)["alpha"] = "a";
      sub->add_option("--alpha", (*o)["alpha"], "Jack parameter");
      sub->add_option("--expr", (*o)["expr"], "expression")->required();
      sub->add_option("--at", (*o)["at"], "comma separated point")->required();
      addFormat(sub, format, false);
      sub->callback([this, o, &action] {
        action = [this, o] {
          RationalFunction alpha = parseScalar((*o)["alpha"]);
          ProductExpr e = parseExpression((*o)["expr"]);
          std::vector<RationalFunction> at = parseScalarList((*o)["at"]);
          std::vector<mpq_class> xs;
          for (const auto& v : at) {
            if (!v.isConstant()) throw DomainError("evaluation point must be numeric, got " + v.toString());
            xs.push_back(v.constantValue());
          }
          VarCount vars = VarCount::numeric(static_cast<int>(xs.size()));
          SymExpr mono = convertTo(alpha, e, Basis::Monomial, vars);
          RationalFunction total;
          for (const auto& [lambda, c] : mono.terms()) total += c * RationalFunction(monomialValue(lambda, xs));
          Json in;
          in["alpha"] = alpha.toString();
          in["expr"] = formatExpression(e);
          auto pts = Json::array();
          for (const auto& x : xs) pts.push_back(x.get_str());
          in["at"] = pts;
          emitScalar("eval", in, total);
        };
      });
    }
  }

  static SymExpr convertTo(const RationalFunction& alpha, const ProductExpr& e, Basis to, VarCount vars) {
    auto bases = e.leafBases();
    bool monomialOnly = std::all_of(bases.begin(), bases.end(), [](Basis b) { return b == Basis::Monomial; });
    if (to == Basis::Monomial || to == Basis::PowerSum) {
      SymExpr mono = monomialOnly ? m2m(e, vars) : toMonomial(alpha, jack2jack(alpha, e, vars));
      if (to == Basis::Monomial) return mono;
      if (!vars.isGeneric()) throw UnsupportedModeError("power-sum output needs a generic number of variables");
      return m2p(ProductExpr::fromSymExpr(mono));
    }
    SymExpr c = jack2jack(alpha, e, vars);
    if (to == Basis::JackC) return c;
    Normalization target = normalizationOf(to);
    SymExpr out(to, vars);
    for (const auto& [kappa, coef] : c.terms())
      out.add(kappa, coef * normalizationFactor(Normalization::C, target, alpha, kappa));
    return out;
  }

  void runHypergeom(std::map<std::string, std::string>& o, std::optional<int> limit, std::optional<double> tol,
                    int cap) {
    requireNoCsv();
    HypergeomSpec spec;
    spec.alpha = parseScalar(o["alpha"]);
    spec.upper = parseScalarList(o["upper"]);
    spec.lower = parseScalarList(o["lower"]);
    spec.limit = limit;
    spec.tolerance = tol;
    spec.degreeCap = cap;
    if (!limit && !tol && config_.defaultLimit) spec.limit = config_.defaultLimit;
    bool symbolicX = false;
    if (!o["xid"].empty()) {
      const std::string& s = o["xid"];
      auto colon = s.rfind(':');
      if (colon == std::string::npos) throw DomainError("--xid must be value:m, got '" + s + "'");
      std::string lhs = s.substr(0, colon);
      int m = static_cast<int>(parseVars(s.substr(colon + 1)).value());
      lhs.erase(0, lhs.find_first_not_of(' '));
      lhs.erase(lhs.find_last_not_of(' ') + 1);
      symbolicX = lhs == "x";
      spec.argument = HypergeomArgument::scalarIdentity(symbolicX ? RationalFunction(1) : parseScalar(lhs), m);
    } else if (!o["x"].empty()) {
      spec.argument = HypergeomArgument::point(parseScalarList(o["x"]));
    } else {
      throw DomainError("one of --xid or --x is required");
    }

    Json in;
    in["alpha"] = spec.alpha.toString();
    auto up = Json::array(), lo = Json::array();
    for (const auto& a : spec.upper) up.push_back(a.toString());
    for (const auto& b : spec.lower) lo.push_back(b.toString());
    in["upper"] = up;
    in["lower"] = lo;
    if (!o["xid"].empty()) in["xid"] = o["xid"];
    else in["x"] = o["x"];
    if (spec.limit) in["limit"] = *spec.limit;
    if (spec.tolerance) in["tol"] = *spec.tolerance;

    if (symbolicX) {
      auto term = terminationDegree(spec);
      if (!term && !spec.limit) throw DomainError("a symbolic argument needs --limit or a terminating series");
      int last = term ? (spec.limit ? std::min(*spec.limit, *term) : *term) : *spec.limit;
      if (last < 0) throw DomainError("truncation degree must be nonnegative");
      std::vector<RationalFunction> coeffs;
      for (int k = 0; k <= last; ++k) coeffs.push_back(hypergeomLayer(spec, k));
      bool terminated = term && (!spec.limit || *spec.limit >= *term);
      if (format_ == Format::Text) {
        out_ << polyInX(coeffs) << "\n";
        return;
      }
      Json j;
      j["command"] = "hypergeom";
      j["input"] = in;
      Json r;
      r["variable"] = "x";
      auto cs = Json::array();
      for (const auto& c : coeffs) cs.push_back(c.toString());
      r["coefficients"] = cs;
      r["degree"] = last;
      r["terminated"] = terminated;
      j["result"] = r;
      out_ << j.dump(2) << "\n";
      return;
    }

    HypergeomResult res = ghypergeom(spec);
    if (res.radiusFlag && !res.terminated)
      err_ << "warning: p = q + 1, the series converges only inside the unit ball\n";
    if (format_ == Format::Text) {
      if (spec.tolerance && res.numeric) out_ << formatDouble(res.value) << "\n";
      else out_ << res.exact.toString() << "\n";
      return;
    }
    Json j;
    j["command"] = "hypergeom";
    j["input"] = in;
    Json r = scalarJson(res.exact);
    r["degree"] = res.degree;
    r["terminated"] = res.terminated;
    r["radiusWarning"] = res.radiusFlag;
    j["result"] = r;
    out_ << j.dump(2) << "\n";
  }

  void emitGrid(const std::string& kind, const Json& in, const std::string& column, const std::vector<double>& xs,
                const std::vector<double>& ys) {
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < xs.size(); ++i) rows.push_back({xs[i], ys[i]});
    if (format_ == Format::Json) {
      Json j;
      j["command"] = "density";
      j["kind"] = kind;
      j["input"] = in;
      Json r;
      r["columns"] = {"x", column};
      auto pts = Json::array();
      for (const auto& row : rows) pts.push_back(row);
      r["points"] = pts;
      j["result"] = r;
      out_ << j.dump(2) << "\n";
      return;
    }
    writeCsv(out_, {"x", column}, rows);
  }

  void runSmallest(std::map<std::string, std::string>& o, int p, int m, bool normalize) {
    RationalFunction alpha = parseScalar(o["alpha"]);
    if (format_ == Format::Text && o["grid"].empty()) {
      SmallestEigForm f = smallestEigForm(alpha, p, m);
      std::string body = "exp(-" + RationalFunction::fraction(m, 2).toString() + "*x)*(" + polyInX(f.poly) + ")";
      if (normalize) {
        NormalizedDensity nd = normalizedSmallestEigDensity(alpha, p, m);
        out_ << formatDouble(1 / nd.mass) << "*" << body << "\n";
      } else {
        out_ << body << "\n";
      }
      return;
    }
    if (o["grid"].empty()) throw DomainError("--grid is required for csv and json output");
    Grid g = parseGrid(o["grid"]);
    std::vector<double> xs = g.points(), ys;
    if (normalize) {
      NormalizedDensity nd = normalizedSmallestEigDensity(alpha, p, m);
      for (double x : xs) ys.push_back(nd(x));
    } else {
      smallestEigForm(alpha, p, m);  // validates once before the loop
      for (double x : xs) ys.push_back(smallestEigDensity(alpha, p, m, x));
    }
    Json in;
    in["alpha"] = alpha.toString();
    in["p"] = p;
    in["m"] = m;
    in["normalize"] = normalize;
    in["grid"] = o["grid"];
    emitGrid("smallest", in, "density", xs, ys);
  }

  void runLevel(std::map<std::string, std::string>& o, int beta, int n, bool scaled) {
    if (format_ == Format::Text && o["grid"].empty()) {
      GaussianPolyForm f = levelDensityForm(beta, n, scaled).canonical();
      std::vector<RationalFunction> poly;
      for (const auto& c : f.poly) poly.push_back(RationalFunction(c));
      out_ << RationalFunction(f.constant).toString() << "*sqrt(" << f.root.get_str() << "/pi)*exp(-"
           << RationalFunction(f.expCoefficient).toString() << "*x^2)*(" << polyInX(poly) << ")\n";
      return;
    }
    if (o["grid"].empty()) throw DomainError("--grid is required for csv and json output");
    Grid g = parseGrid(o["grid"]);
    GaussianPolyForm f = levelDensityForm(beta, n, scaled);
    std::vector<double> xs = g.points(), ys;
    for (double x : xs) ys.push_back(f(x));
    Json in;
    in["beta"] = beta;
    in["n"] = n;
    in["scaled"] = scaled;
    in["grid"] = o["grid"];
    emitGrid("level", in, "density", xs, ys);
  }

  void runLargest(std::map<std::string, std::string>& o, int m, double tol) {
    RationalFunction alpha = parseScalar(o["alpha"]), gamma = parseScalar(o["gamma"]);
    Grid g = parseGrid(o["grid"]);
    std::vector<double> xs = g.points(), ys;
    for (double x : xs) {
      CdfResult r = largestEigCDF(alpha, gamma, m, x, tol);
      if (r.clamped) err_ << "warning: cdf at x = " << formatDouble(x) << " clamped from " << formatDouble(r.raw) << "\n";
      ys.push_back(r.value);
    }
    Json in;
    in["alpha"] = alpha.toString();
    in["gamma"] = gamma.toString();
    in["m"] = m;
    in["tol"] = tol;
    in["grid"] = o["grid"];
    emitGrid("largest", in, "cdf", xs, ys);
  }

  std::ostream& out_;
  std::ostream& err_;
  Format format_ = Format::Text;
  Config config_;
};

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(args);
}

}  // namespace mops
