#include "cli.hpp"

#include "coxsupport/dunkl.hpp"
#include "coxsupport/elliptic.hpp"
#include "coxsupport/mehta.hpp"
#include "coxsupport/trig.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace coxsupport::cli {

using nlohmann::ordered_json;

namespace {

/// Oracle disagreement under --verify.
class VerifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  ordered_json result = ordered_json::object();
  std::vector<std::string> provenance;
  std::ostringstream text;
};

std::string rat(const Rational& q) { return format_rational(q); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> int_strings(const std::vector<int>& v) {
  std::vector<std::string> s;
  for (int x : v) s.push_back(std::to_string(x));
  return s;
}

ordered_json type_json(const CoxeterType& t) {
  return {{"name", t.name()}, {"rank", t.rank()}, {"order", t.order().get_str()}, {"degrees", t.degrees()}};
}

CoxeterLabel irreducible_label(const CoxeterType& t, const std::string& what) {
  if (!t.irreducible()) throw std::invalid_argument(what + " needs an irreducible type, got " + t.name());
  return t.factors[0].label;
}

/// Equal parameter c, or the pair (c1, c2); exactly one form must be given.
struct Params {
  std::string c, c1, c2;

  bool two() const { return c.empty(); }
  Rational equal() const {
    if (c.empty()) throw std::invalid_argument("--c is required");
    return parse_rational(c);
  }
  ParamPair pair() const {
    if (c1.empty() || c2.empty()) throw std::invalid_argument("--c1 and --c2 are required");
    return {parse_rational(c1), parse_rational(c2)};
  }
  void check() const {
    if (!c.empty() && (!c1.empty() || !c2.empty())) throw std::invalid_argument("give either --c or --c1/--c2");
    if (c.empty() && (c1.empty() || c2.empty())) throw std::invalid_argument("give --c, or both --c1 and --c2");
  }
};

void add_params(CLI::App* sub, Params& p) {
  sub->add_option("--c", p.c, "equal parameter, exact rational p/q");
  sub->add_option("--c1", p.c1, "parameter on reflection class 1");
  sub->add_option("--c2", p.c2, "parameter on reflection class 2");
}

// ------------------------------------------------------------ commands

void cmd_degrees(const CoxeterType& t, Output& o) {
  auto d = t.degrees();
  std::vector<int> e;
  for (int x : d) e.push_back(x - 1);
  int reflections = 0;
  for (int x : e) reflections += x;
  o.result["degrees"] = d;
  o.result["exponents"] = e;
  o.result["order"] = t.order().get_str();
  o.result["reflections"] = reflections;
  o.provenance.push_back("degrees from the catalog");
  o.text << "type        " << t.name() << "\n"
         << "degrees     " << join(int_strings(d), " ") << "\n"
         << "exponents   " << join(int_strings(e), " ") << "\n"
         << "order       " << t.order().get_str() << "\n"
         << "reflections " << reflections << "\n";
}

void cmd_roots(const CoxeterType& t, Output& o) {
  const RootSystem& rs = root_system(irreducible_label(t, "roots"));
  ordered_json roots = ordered_json::array();
  o.text << "positive roots of " << t.name() << " in simple-root coordinates\n";
  for (int k = 0; k < rs.num_positive; ++k) {
    std::vector<std::string> coords;
    for (const auto& x : rs.roots[k]) coords.push_back(x.to_string());
    roots.push_back({{"coordinates", coords}, {"class", rs.root_class[k]}});
    o.text << "  (" << join(coords, ", ") << ")  class " << rs.root_class[k] << "\n";
  }
  o.result["positive_roots"] = roots;
  o.result["count"] = rs.num_positive;
  o.provenance.push_back("closure of the simple roots under simple reflections");
}

void cmd_poincare(const CoxeterType& t, bool two, bool verify, Output& o) {
  if (!two) {
    UniPoly p = poincare1(t);
    std::string product;
    for (int d : t.degrees()) product += "[" + std::to_string(d) + "]";
    o.result["product"] = product;
    o.result["expanded"] = to_string(p);
    o.provenance.push_back("product of q-integers over the degrees");
    if (verify) {
      if (poincare_bruteforce1(irreducible_label(t, "poincare --verify")) != p) {
        throw VerifyError("length generating function differs from the degree product");
      }
      o.provenance.push_back("verified against the length generating function of the enumerated group");
    }
    o.text << "P(q) = " << product << "\n     = " << to_string(p) << "\n";
    return;
  }
  FactoredBiPoincare f = poincare2(t);
  BiLaurent p = f.expand();
  o.result["factored"] = f.to_string();
  o.result["expanded"] = to_string(p);
  o.provenance.push_back("two-variable product over root heights or the dihedral form");
  if (verify) {
    if (poincare_bruteforce2(irreducible_label(t, "poincare --verify")) != p) {
      throw VerifyError("two-variable length generating function differs from the product form");
    }
    o.provenance.push_back("verified against the two-variable length generating function");
  }
  o.text << "P(q1,q2) = " << f.to_string() << "\n         = " << to_string(p) << "\n";
}

/// P_W / P_Wa at exp(2 pi i c) is nonzero.
bool ratio_nonzero_at(const CoxeterType& w, const CoxeterType& wa, const Rational& c) {
  DivisionResult r = poincare_ratio(w, wa);
  if (!r.exact) throw VerifyError("P_W is not divisible by P_Wa for " + wa.name());
  return !cyclo_eval_root(r.quotient, c).is_zero();
}

void cmd_support(const CoxeterType& t, const Params& p, bool verify, Output& o) {
  p.check();
  ordered_json strata = ordered_json::array();
  if (!p.two()) {
    Rational c = p.equal();
    o.result["c"] = rat(c);
    const bool oracle_applies = c > 0 && !is_integer(c);
    o.text << "support of L_c for " << t.name() << " at c = " << rat(c) << "\n";
    for (const auto& s : support_strata(t, c)) {
      if (verify && oracle_applies && ratio_nonzero_at(t, s.parabolic.type, c) != s.in_support) {
        throw VerifyError("Poincare ratio disagrees for stratum " + s.parabolic.type.name());
      }
      strata.push_back({{"stabilizer", s.parabolic.type.name()},
                        {"nodes", s.parabolic.nodes},
                        {"codimension", s.codimension},
                        {"in_support", s.in_support}});
      o.text << "  " << std::left << std::setw(24) << s.parabolic.type.name() << " codim " << s.codimension << "  "
             << (s.in_support ? "in support" : "-") << "\n";
    }
    const bool finite = is_finite_dim_equal(t, c);
    o.result["strata"] = strata;
    o.result["finite_dim"] = finite;
    o.provenance.push_back("degree counts a_W(m) against a_Wa(m) for the denominator m of c");
    if (verify) {
      o.provenance.push_back(oracle_applies ? "verified: P_W/P_Wa at exp(2 pi i c) is nonzero exactly on the support"
                                            : "verify skipped: c <= 0 or integral, where M_c is irreducible");
    }
    o.text << "finite dimensional: " << yes_no(finite) << "\n";
    return;
  }
  ParamPair c = p.pair();
  o.result["c1"] = rat(c.first);
  o.result["c2"] = rat(c.second);
  o.text << "support of L_c for " << t.name() << " at (c1, c2) = (" << rat(c.first) << ", " << rat(c.second) << ")\n";
  const bool enumerable = t.irreducible() && t.order() <= enumeration_cap();
  for (const auto& s : support_strata_two(t, c)) {
    LineVerdict v = in_support_two(t, s.parabolic.type, c);
    if (verify) {
      if (v.line) {
        if (!ratio_vanishes_on_line(t, s.parabolic.type, c, *v.line, enumerable)) {
          throw VerifyError("ratio does not vanish on the witness line for " + s.parabolic.type.name());
        }
      } else {
        for (const auto& line : candidate_lines(poincare2(t), poincare2(s.parabolic.type), c)) {
          if (ratio_vanishes_on_line(t, s.parabolic.type, c, line, enumerable)) {
            throw VerifyError("ratio vanishes on " + line.to_string() + " for " + s.parabolic.type.name());
          }
        }
      }
    }
    ordered_json e = {{"stabilizer", s.parabolic.type.name()},
                      {"nodes", s.parabolic.nodes},
                      {"codimension", s.codimension},
                      {"in_support", s.in_support}};
    e["line"] = v.line ? ordered_json(v.line->to_string()) : ordered_json(nullptr);
    strata.push_back(e);
    o.text << "  " << std::left << std::setw(24) << s.parabolic.type.name() << " codim " << s.codimension << "  "
           << (s.in_support ? "in support" : "-") << (v.line ? "  vanishing line " + v.line->to_string() : "") << "\n";
  }
  const bool finite = is_finite_dim_two(t, c);
  o.result["strata"] = strata;
  o.result["finite_dim"] = finite;
  o.provenance.push_back("positive-line test on the factored two-variable Poincare ratio");
  if (verify) {
    o.provenance.push_back(std::string("verified: expanded ratio restricted to every candidate line") +
                           (enumerable ? ", P_W from enumeration" : ""));
  }
  o.text << "finite dimensional: " << yes_no(finite) << "\n";
}

void cmd_finite_dim(const CoxeterType& t, const Params& p, int max_m, Output& o) {
  if (max_m > 0) {
    auto ms = finite_dim_denominators(t, max_m);
    o.result["max_denominator"] = max_m;
    o.result["denominators"] = ms;
    o.provenance.push_back("a_W(m) exceeds a_W'(m) for every maximal parabolic W'");
    std::vector<std::string> s;
    for (int m : ms) s.push_back(std::to_string(m));
    o.text << "denominators m <= " << max_m << " with L_{r/m} finite dimensional: " << join(s, " ") << "\n";
    return;
  }
  p.check();
  bool finite = false;
  if (p.two()) {
    ParamPair c = p.pair();
    o.result["c1"] = rat(c.first);
    o.result["c2"] = rat(c.second);
    finite = is_finite_dim_two(t, c);
    o.provenance.push_back("no maximal parabolic stratum survives the positive-line test");
  } else {
    Rational c = p.equal();
    o.result["c"] = rat(c);
    finite = is_finite_dim_equal(t, c);
    o.provenance.push_back("a_W(m) exceeds a_W'(m) for every maximal parabolic W'");
  }
  o.result["finite_dim"] = finite;
  o.text << "finite dimensional: " << yes_no(finite) << "\n";
}

void cmd_sigma(const CoxeterType& t, const Params& p, const std::string& plot, const std::string& range, bool verify,
               Output& o) {
  if (!p.c.empty()) throw std::invalid_argument("sigma takes --c1 and --c2");
  ParamPair c = p.pair();
  const bool member = is_finite_dim_two(t, c);
  o.result["c1"] = rat(c.first);
  o.result["c2"] = rat(c.second);
  o.result["member"] = member;
  o.provenance.push_back("membership from the positive-line support test");
  ordered_json witnesses = ordered_json::array();
  if (has_sigma_closed_form(t)) {
    auto ws = sigma_member(t, c);
    for (const auto& w : ws) witnesses.push_back({{"family", w.family}, {"line", w.is_line}, {"detail", w.detail}});
    o.result["witness"] = ws.empty() ? ordered_json(nullptr) : ordered_json(ws.front().family);
    o.result["families"] = witnesses;
    o.provenance.push_back("families from the explicit classification");
    if (verify) {
      if (ws.empty() == member) throw VerifyError("explicit classification disagrees with the support test");
      o.provenance.push_back("verified: explicit classification agrees with the support test");
    }
  } else if (verify) {
    throw ScopeError("no explicit classification for " + t.name());
  }
  o.text << "(c1, c2) = (" << rat(c.first) << ", " << rat(c.second) << ") in Sigma: " << yes_no(member) << "\n";
  for (const auto& w : witnesses) {
    o.text << "  family " << w["family"].get<std::string>() << (w["line"].get<bool>() ? " (line)" : " (point)");
    if (!w["detail"].get<std::string>().empty()) o.text << "  " << w["detail"].get<std::string>();
    o.text << "\n";
  }
  if (!plot.empty()) {
    auto colon = range.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("--range must look like a:b");
    Rational lo = parse_rational(range.substr(0, colon));
    Rational hi = parse_rational(range.substr(colon + 1));
    if (!(lo < hi)) throw std::invalid_argument("--range needs a < b");
    std::ofstream f(plot);
    if (!f) throw std::runtime_error("cannot write " + plot);
    f << sigma_svg(t, lo, hi, c);
    o.result["plot"] = {{"file", plot}, {"range", {rat(lo), rat(hi)}}};
    o.text << "plot written to " << plot << "\n";
  }
}

void cmd_mm(const CoxeterType& t, const Params& p, bool numeric, const std::string& method, Output& o) {
  p.check();
  GammaProduct g;
  double c1 = 0, c2 = 0;
  if (p.two()) {
    ParamPair c = p.pair();
    o.result["c1"] = rat(c.first);
    o.result["c2"] = rat(c.second);
    g = mm_value2(t, c.first, c.second);
    c1 = c.first.get_d();
    c2 = c.second.get_d();
    o.provenance.push_back("two-parameter Gamma product over root heights or the dihedral form");
  } else {
    Rational c = p.equal();
    o.result["c"] = rat(c);
    g = mm_value(t, c);
    c1 = c2 = c.get_d();
    o.provenance.push_back("Gamma product over the degrees");
  }
  o.result["exact"] = g.to_string();
  o.result["order"] = g.order();
  o.text << "F_W(c) = " << g.to_string() << "\n";
  if (g.order() > 0) {
    o.result["value"] = "pole";
    o.text << "       pole of order " << g.order() << "\n";
  } else if (g.order() < 0) {
    o.result["value"] = 0;
    o.text << "       = 0 (zero of order " << -g.order() << ")\n";
  } else {
    const double v = g.value();
    o.result["value"] = v;
    o.text << "       = " << std::setprecision(10) << v << "\n";
  }
  if (numeric) {
    const CoxeterLabel l = irreducible_label(t, "mm --numeric");
    if (method != "adaptive" && method != "montecarlo") throw std::invalid_argument("--method is adaptive or montecarlo");
    if (c1 > 0 || c2 > 0) throw ScopeError("the integral converges only for c <= 0");
    auto r = mm_numeric(l, c1, c2, method == "adaptive" ? Quadrature::Adaptive : Quadrature::MonteCarlo);
    o.result["numeric"] = {{"value", r.value}, {"error", r.error}, {"method", method}};
    o.provenance.push_back("numeric Gaussian-weighted integral (" + method + ")");
    o.text << "numeric  " << std::setprecision(7) << r.value << "  (error estimate " << std::setprecision(2) << r.error
           << ", " << method << ")\n";
  }
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> x;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) x.push_back(parse_rational(item));
  return x;
}

void cmd_trig(const CoxeterType& t, const Params& p, const std::string& point, Output& o) {
  const CoxeterLabel l = irreducible_label(t, "trig");
  Rational c = p.equal();
  o.result["c"] = rat(c);
  o.result["coordinates"] = TorusPoint::uses_e_basis(l) ? "e-basis" : "simple-root values";
  if (!point.empty()) {
    TorusPoint x{l, parse_point(point)};
    Stabilizer s = stabilizer_subsystem(x);
    const bool in = in_trig_support(x, c);
    std::vector<std::string> xs;
    for (const auto& v : x.x) xs.push_back(rat(v));
    o.result["point"] = {{"x", xs}, {"torus", x.torus_string()}, {"stabilizer", s.type.name()}, {"in_support", in}};
    o.provenance.push_back("degree counts of the stabilizer of the torus point");
    o.text << "a = exp(2 pi i x) = " << x.torus_string() << "\nstabilizer " << s.type.name() << "\nin support: "
           << yes_no(in) << "\n";
    return;
  }
  ordered_json strata = ordered_json::array();
  o.text << "stabilizer types of torus points for " << l.name() << " at c = " << rat(c) << "\n";
  for (const auto& s : trig_support_strata(l, c)) {
    std::vector<std::string> xs;
    for (const auto& v : s.witness.x) xs.push_back(rat(v));
    strata.push_back({{"stabilizer", s.type.name()},
                      {"witness", xs},
                      {"torus", s.witness.torus_string()},
                      {"extended_nodes", s.extended_nodes},
                      {"in_support", s.in_support}});
    o.text << "  " << std::left << std::setw(24) << s.type.name() << (s.in_support ? " in support  " : " -           ")
           << "at " << s.witness.torus_string() << "\n";
  }
  o.result["strata"] = strata;
  o.provenance.push_back("stabilizers from proper subsets of the extended Dynkin diagram");
}

void cmd_elliptic(const CoxeterType& t, int m, bool verify, Output& o) {
  const bool elliptic = is_elliptic_number(t, m);
  const bool regular = is_regular_number(t, m);
  o.result["m"] = m;
  o.result["elliptic"] = elliptic;
  o.result["regular"] = regular;
  o.result["a_W"] = a_count(t, m);
  o.provenance.push_back("elliptic: a_W(m) > a_W'(m) for every maximal parabolic; regular: degrees vs codegrees");
  o.text << "m = " << m << "\nelliptic number: " << yes_no(elliptic) << "\nregular number:  " << yes_no(regular) << "\n";
  if (verify) {
    auto s = brute_force_search(irreducible_label(t, "elliptic --verify"), m);
    if (s.regular != regular || s.regular_elliptic != elliptic) {
      throw VerifyError("eigenspace search disagrees with the degree criteria");
    }
    o.result["oracle"] = {{"elements_with_eigenvalue", s.reports.size()},
                          {"regular", s.regular},
                          {"regular_elliptic", s.regular_elliptic},
                          {"max_dimension", s.max_dimension}};
    o.provenance.push_back("verified by exact eigenspaces over the cyclotomic field of every element");
    o.text << "verified over " << s.reports.size() << " elements with eigenvalue exp(2 pi i/" << m << ")\n";
  }
}

void cmd_oracle(const std::string& which, const CoxeterType& t, const Params& p, int dmax, Output& o) {
  const CoxeterLabel l = irreducible_label(t, "oracle");
  p.check();
  Rational c1, c2;
  if (p.two()) {
    std::tie(c1, c2) = p.pair();
    o.result["c1"] = rat(c1);
    o.result["c2"] = rat(c2);
  } else {
    c1 = c2 = p.equal();
    o.result["c"] = rat(c1);
  }
  o.result["dmax"] = dmax;
  DunklSystem sys(l, c1, c2);
  if (which == "relations") {
    auto v = check_relations(sys, dmax);
    o.result["holds"] = !v.has_value();
    if (v) o.result["violation"] = {{"a", v->a}, {"b", v->b}, {"monomial", v->monomial}};
    o.provenance.push_back("commutators of Dunkl operators with coordinates on all monomials");
    o.text << "defining relations up to degree " << dmax << ": " << (v ? "VIOLATED" : "hold") << "\n";
    return;
  }
  if (which == "gram") {
    auto g = beta_gram(sys, dmax);
    ordered_json degrees = ordered_json::array();
    o.text << "degree  size  rank\n";
    for (int d = 0; d <= dmax; ++d) {
      degrees.push_back({{"degree", d}, {"size", g.bases[d].size()}, {"rank", g.ranks[d]}});
      o.text << std::setw(6) << d << std::setw(6) << g.bases[d].size() << std::setw(6) << g.ranks[d] << "\n";
    }
    o.result["degrees"] = degrees;
    o.provenance.push_back("contravariant form (P(T) Q)(0) on monomials in x_i = (alpha_i, .)");
    return;
  }
  if (which == "quotient") {
    auto q = measure_quotient(sys, dmax);
    o.result["ranks"] = q.ranks;
    o.result["window"] = q.window;
    o.result["finite"] = q.finite;
    o.result["dimension"] = q.dimension;
    o.provenance.push_back("dim L_c as the sum of contravariant Gram ranks");
    o.text << "ranks " << join(int_strings(q.ranks), " ") << "\n"
           << (q.finite ? "finite, dim " : "unresolved, dim >= ") << q.dimension << "\n";
    return;
  }
  throw std::invalid_argument("oracle kind is gram, relations or quotient");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Support and finite dimensionality of spherical Cherednik modules for finite Coxeter groups"};
  app.name("coxsupport");
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "print the JSON envelope");

  std::string type_text;
  Params params;
  bool verify = false, two = false, numeric = false;
  std::string plot, range = "-2:2", method = "adaptive", point, oracle_kind;
  int max_m = 0, m = 0, dmax = 6;

  auto typed = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("type", type_text, "Coxeter type, e.g. A3, B4, I2:8, H3, F4, A1xA2")->required();
    return s;
  };
  auto* degrees = typed("degrees", "degrees, exponents and order");
  auto* roots = typed("roots", "positive roots");
  auto* poincare = typed("poincare", "Poincare polynomial");
  poincare->add_flag("--two", two, "two-variable form");
  poincare->add_flag("--verify", verify, "compare with the enumerated group");
  auto* support = typed("support", "support strata of L_c");
  add_params(support, params);
  support->add_flag("--verify", verify, "cross-check with the Poincare ratio oracle");
  auto* finite = typed("finite-dim", "is L_c finite dimensional");
  add_params(finite, params);
  finite->add_option("--max", max_m, "list denominators up to this bound");
  auto* sigma = typed("sigma", "two-parameter finite-dimensionality locus");
  add_params(sigma, params);
  sigma->add_option("--plot", plot, "write an SVG picture");
  sigma->add_option("--range", range, "plot range a:b (default -2:2)");
  sigma->add_flag("--verify", verify, "cross-check with the explicit classification");
  auto* mm = typed("mm", "Macdonald-Mehta integral");
  add_params(mm, params);
  mm->add_flag("--numeric", numeric, "evaluate the integral numerically (rank <= 2, c <= 0)");
  mm->add_option("--method", method, "adaptive or montecarlo");
  auto* trig = typed("trig", "support on the torus");
  add_params(trig, params);
  trig->add_option("--point", point, "comma-separated coordinates x of a = exp(2 pi i x)");
  auto* elliptic = typed("elliptic", "elliptic and regular numbers");
  elliptic->add_option("--m", m, "order m >= 2")->required();
  elliptic->add_flag("--verify", verify, "cross-check with the eigenspace search");
  auto* oracle = app.add_subcommand("oracle", "Dunkl operator oracles");
  oracle->add_option("kind", oracle_kind, "gram, relations or quotient")->required();
  oracle->add_option("type", type_text, "Coxeter type")->required();
  add_params(oracle, params);
  oracle->add_option("--dmax", dmax, "largest degree");

  std::vector<const char*> argv{"coxsupport"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  Output o;
  CoxeterType type;
  std::string command = app.get_subcommands().front()->get_name();
  try {
    type = CoxeterType::parse(type_text);
    if (degrees->parsed()) cmd_degrees(type, o);
    if (roots->parsed()) cmd_roots(type, o);
    if (poincare->parsed()) cmd_poincare(type, two, verify, o);
    if (support->parsed()) cmd_support(type, params, verify, o);
    if (finite->parsed()) cmd_finite_dim(type, params, max_m, o);
    if (sigma->parsed()) cmd_sigma(type, params, plot, range, verify, o);
    if (mm->parsed()) cmd_mm(type, params, numeric, method, o);
    if (trig->parsed()) cmd_trig(type, params, point, o);
    if (elliptic->parsed()) cmd_elliptic(type, m, verify, o);
    if (oracle->parsed()) cmd_oracle(oracle_kind, type, params, dmax, o);
  } catch (const ScopeError& e) {
    err << "out of scope: " << e.what() << "\n";
    return kExitScope;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const VerifyError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }

  if (json) {
    ordered_json env;
    env["schema"] = "coxsupport/1";
    env["command"] = {{"name", command}, {"args", args}};
    env["type"] = type_json(type);
    env["result"] = o.result;
    env["provenance"] = o.provenance;
    out << env.dump(2) << "\n";
  } else {
    out << o.text.str();
  }
  return kExitOk;
}

}  // namespace coxsupport::cli
