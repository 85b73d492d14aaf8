// One line per acceptance criterion; exit status is nonzero if any criterion fails.

#include "coxsupport/dunkl.hpp"
#include "coxsupport/elliptic.hpp"
#include "coxsupport/mehta.hpp"
#include "coxsupport/poincare.hpp"
#include "coxsupport/support.hpp"
#include "coxsupport/trig.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

using namespace coxsupport;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  long checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail << "first failure: " << what;
    }
  }
};

Rational q(long p, long d = 1) { return make_rational(p, d); }

std::vector<CoxeterLabel> catalog() {
  std::vector<CoxeterLabel> out;
  for (int n = 1; n <= 8; ++n) out.push_back(CoxeterLabel::A(n));
  for (int n = 2; n <= 8; ++n) out.push_back(CoxeterLabel::B(n));
  for (int n = 4; n <= 8; ++n) out.push_back(CoxeterLabel::D(n));
  for (int n = 6; n <= 8; ++n) out.push_back(CoxeterLabel::E(n));
  out.push_back(CoxeterLabel::F4());
  out.push_back(CoxeterLabel::H(3));
  out.push_back(CoxeterLabel::H(4));
  for (int p = 3; p <= 30; ++p) out.push_back(CoxeterLabel::I2(p));
  return out;
}

void criterion1(Verdict& v) {
  std::vector<CoxeterLabel> one;
  for (int p = 3; p <= 12; ++p) one.push_back(CoxeterLabel::I2(p));
  for (int n = 1; n <= 4; ++n) one.push_back(CoxeterLabel::A(n));
  for (int n = 2; n <= 4; ++n) one.push_back(CoxeterLabel::B(n));
  for (auto l : {CoxeterLabel::D(4), CoxeterLabel::H(3), CoxeterLabel::F4()}) one.push_back(l);
  for (const auto& l : one) {
    v.expect(poincare_bruteforce1(l) == poincare1(CoxeterType::single(l)), l.name() + " one variable");
  }
  for (auto l : {CoxeterLabel::I2(4), CoxeterLabel::I2(6), CoxeterLabel::I2(8), CoxeterLabel::B(2), CoxeterLabel::B(3),
                 CoxeterLabel::F4()}) {
    v.expect(poincare_bruteforce2(l) == poincare2(CoxeterType::single(l)).expand(), l.name() + " two variables");
  }
  v.detail << one.size() << " one-variable and 6 two-variable identities";
}

void criterion2(Verdict& v) {
  const int bound = 120;
  for (int p = 3; p <= 30; ++p) {
    std::set<int> divisors;
    for (int d = 2; d <= p; ++d) {
      if (p % d == 0) divisors.insert(d);
    }
    v.expect(finite_dim_denominators(CoxeterType::single(CoxeterLabel::I2(p)), bound) == divisors,
             "I2(" + std::to_string(p) + ")");
  }
  v.expect(finite_dim_denominators(CoxeterType::parse("H3"), bound) == std::set<int>{2, 6, 10}, "H3");
  v.expect(finite_dim_denominators(CoxeterType::parse("H4"), bound) ==
               std::set<int>{2, 3, 4, 5, 6, 10, 12, 15, 20, 30},
           "H4");
  v.detail << "I2(3..30), H3, H4 with m <= " << bound;
}

void criterion3(Verdict& v) {
  std::vector<CoxeterLabel> groups = {CoxeterLabel::A(1)};
  for (int p = 3; p <= 6; ++p) groups.push_back(CoxeterLabel::I2(p));
  groups.push_back(CoxeterLabel::B(2));
  double worst = 0;
  int fallbacks = 0;
  for (const auto& l : groups) {
    for (const Rational& c : {q(-1, 4), q(-1, 2), q(-1)}) {
      const double exact = mm_value(CoxeterType::single(l), c).value();
      const double cd = c.get_d();
      auto r = mm_numeric(l, cd, cd, Quadrature::Adaptive);
      double rel = std::abs(r.value - exact) / std::abs(exact);
      if (rel < 1e-6) {
        worst = std::max(worst, rel);
        v.expect(true, l.name());
        continue;
      }
      ++fallbacks;
      auto mc = mm_numeric(l, cd, cd, Quadrature::MonteCarlo);
      rel = std::abs(mc.value - exact) / std::abs(exact);
      v.expect(rel < 1e-3, l.name() + " c=" + format_rational(c) + " Monte Carlo");
    }
  }
  v.detail << "18 cases, worst quadrature rel. error " << worst << ", Monte Carlo fallbacks " << fallbacks;
}

void criterion4(Verdict& v) {
  long pairs = 0;
  for (const auto& l : catalog()) {
    const auto w = CoxeterType::single(l);
    for (const auto& par : standard_parabolics(w)) {
      DivisionResult ratio = poincare_ratio(w, par.type);
      v.expect(ratio.exact, l.name() + " / " + par.type.name() + " divisibility");
      for (int m = 2; m <= 30; ++m) {
        const bool counts = a_count(w, m) == a_count(par.degrees, m);
        const bool cyclo = !cyclo_eval_root(ratio.quotient, q(1, m)).is_zero();
        v.expect(counts == cyclo, l.name() + " / " + par.type.name() + " m=" + std::to_string(m) + " cyclotomic");
        for (int p = 1; p < m; ++p) {
          if (std::gcd(p, m) != 1) continue;
          v.expect(counts == mm_ratio_nonzero(w, par.type, q(p, m)),
                   l.name() + " / " + par.type.name() + " c=" + std::to_string(p) + "/" + std::to_string(m) + " Gamma");
        }
        ++pairs;
      }
    }
  }
  v.detail << pairs << " (W, W_a, m) triples over " << catalog().size() << " groups";
}

void criterion5(Verdict& v) {
  long points = 0;
  for (const char* name : {"I2:4", "I2:6", "B2", "B3", "F4"}) {
    const auto w = CoxeterType::parse(name);
    for (int a = 1; a <= 36; ++a) {
      for (int b = 1; b <= 36; ++b) {
        const ParamPair c{q(a, 12), q(b, 12)};
        v.expect(is_finite_dim_two(w, c) == !sigma_member(w, c).empty(),
                 std::string(name) + " at (" + format_rational(c.first) + ", " + format_rational(c.second) + ")");
        ++points;
      }
      const Rational c = q(a, 12);
      for (const auto& s : support_strata_two(w, {c, c})) {
        v.expect(s.in_support == in_support_equal(w, s.parabolic.type, c),
                 std::string(name) + " diagonal stratum " + s.parabolic.type.name());
      }
      v.expect(is_finite_dim_two(w, {c, c}) == is_finite_dim_equal(w, c), std::string(name) + " diagonal");
    }
  }
  for (int n = 3; n <= 5; ++n) {
    const auto b = CoxeterType::single(CoxeterLabel::B(n));
    const auto d = CoxeterType::single(n == 3 ? CoxeterLabel::A(3) : CoxeterLabel::D(n));
    for (int a = 1; a <= 36; ++a) {
      v.expect(is_finite_dim_two(b, {q(a, 12), q(0)}) == is_finite_dim_equal(d, q(a, 12)),
               "B" + std::to_string(n) + " at c2=0, c1=" + format_rational(q(a, 12)));
    }
  }
  v.detail << points << " grid points, diagonal and c2=0 restrictions";
}

void criterion6(Verdict& v) {
  std::set<std::string> in;
  std::map<std::string, std::string> witness;
  for (const auto& s : trig_support_strata(CoxeterLabel::B(2), q(1, 2))) {
    if (!s.in_support) continue;
    in.insert(s.type.name());
    witness[s.type.name()] = s.witness.torus_string();
  }
  v.expect(in == std::set<std::string>{"B2", "A1(c1)xA1(c1)"}, "in-support types");
  v.expect(witness["B2"] == "(1, 1)", "B2 witness");
  v.expect(witness["A1(c1)xA1(c1)"] == "(-1, -1)", "A1xA1 witness");
  v.detail << "types {B2, A1xA1 long} at (1, 1) and (-1, -1)";
}

double weighted_ratio(const CoxeterLabel& l, const Rational& c1, const Rational& c2, const GradedPoly& p,
                      const GradedPoly& r) {
  const RealFrame fr = real_frame(l);
  auto f = [&](const std::vector<double>& x) {
    std::vector<double> coords(static_cast<std::size_t>(fr.rank), 0.0);
    for (int i = 0; i < fr.rank; ++i) {
      for (int k = 0; k < fr.rank; ++k) coords[i] += fr.simple[i][k] * x[k];
    }
    auto eval = [&](const GradedPoly& g) {
      double s = 0;
      for (const auto& [e, c] : g.terms()) {
        double t = c.to_complex().real();
        for (int i = 0; i < fr.rank; ++i) t *= std::pow(coords[i], e[i]);
        s += t;
      }
      return s;
    };
    return eval(p) * eval(r);
  };
  return weighted_integral(l, c1.get_d(), c2.get_d(), f, Quadrature::Adaptive).value /
         mm_numeric(l, c1.get_d(), c2.get_d()).value;
}

void criterion7(Verdict& v) {
  v.expect(!check_relations(DunklSystem(CoxeterLabel::A(1), q(1, 3)), 5), "A1 relations");
  v.expect(!check_relations(DunklSystem(CoxeterLabel::A(2), q(1, 3)), 5), "A2 relations");
  v.expect(!check_relations(DunklSystem(CoxeterLabel::B(2), q(1, 2), q(1, 4)), 5), "B2 relations");
  v.expect(!check_relations(DunklSystem(CoxeterLabel::I2(6), q(1, 3), q(1, 5)), 5), "I2(6) relations");
  v.expect(!check_relations(DunklSystem(CoxeterLabel::H(3), q(1, 5)), 5), "H3 relations");

  // Orthonormal x = x_1 / |alpha|: beta(x, x) = G^{-1} beta(x_1, x_1).
  auto sym = beta_gram_symbolic(CoxeterLabel::A(1), 1);
  Rational g = root_system(CoxeterLabel::A(1)).gram[0][0].rational_value();
  CPoly bxx = sym[1][0][0];
  for (auto& coef : bxx) coef /= g;
  v.expect(bxx == CPoly{Rational(1), Rational(-2)}, "A1 beta(x, x) = 1 - 2c");

  auto b2 = measure_quotient(DunklSystem(CoxeterLabel::B(2), q(1, 2)), 8);
  v.expect(b2.finite && b2.dimension == 4, "dim L_{1/2}(B2) = 4");
  auto a1 = measure_quotient(DunklSystem(CoxeterLabel::A(1), q(1, 2)), 4);
  v.expect(a1.finite && a1.dimension == 1, "dim L_{1/2}(A1) = 1");

  double worst = 0;
  auto gauss = [&](const CoxeterLabel& l, const Rational& c1, const Rational& c2, const Monomial& e1,
                   const Monomial& e2) {
    DunklSystem s(l, c1, c2);
    GradedPoly p = GradedPoly::monomial(e1);
    GradedPoly r = GradedPoly::monomial(e2);
    const double exact = s.gaussian(p, r).to_complex().real();
    const double num = weighted_ratio(l, c1, c2, p, r);
    const double err = std::abs(exact - num) / std::max(1.0, std::abs(exact));
    worst = std::max(worst, err);
    v.expect(err < 1e-6, l.name() + " Gaussian form");
  };
  gauss(CoxeterLabel::A(1), q(-1, 2), q(-1, 2), {1}, {1});
  gauss(CoxeterLabel::A(1), q(-1, 4), q(-1, 4), {2}, {2});
  gauss(CoxeterLabel::B(2), q(-1, 2), q(-1, 4), {2, 0}, {0, 2});
  gauss(CoxeterLabel::A(2), q(-1, 4), q(-1, 4), {1, 1}, {2, 0});
  gauss(CoxeterLabel::I2(6), q(-1, 4), q(-1, 2), {1, 0}, {0, 1});
  v.detail << "relations to degree 5, symbolic beta, dims 4 and 1, worst Gaussian error " << worst;
}

void criterion8(Verdict& v) {
  std::vector<CoxeterLabel> groups;
  for (int n = 1; n <= 4; ++n) groups.push_back(CoxeterLabel::A(n));
  for (auto l : {CoxeterLabel::B(2), CoxeterLabel::B(3), CoxeterLabel::D(4), CoxeterLabel::H(3), CoxeterLabel::F4()}) {
    groups.push_back(l);
  }
  for (int p = 3; p <= 12; ++p) groups.push_back(CoxeterLabel::I2(p));
  for (const auto& l : groups) {
    const auto w = CoxeterType::single(l);
    for (int m = 2; m <= 30; ++m) {
      const auto s = brute_force_search(l, m);
      const std::string tag = l.name() + " m=" + std::to_string(m);
      v.expect(is_elliptic_number(w, m) == s.regular_elliptic, tag + " elliptic");
      v.expect(is_regular_number(w, m) == s.regular, tag + " regular");
      if (l.crystallographic()) v.expect(is_elliptic_number(w, m) == is_finite_dim_equal(w, q(1, m)), tag + " Weyl");
    }
  }
  v.detail << groups.size() << " groups, 2 <= m <= 30";
}

void criterion9(Verdict& v) {
  long cases = 0;
  for (const auto& l : catalog()) {
    const auto w = CoxeterType::single(l);
    for (int d = 1; d <= 12; ++d) {
      for (int p = -d; p <= 3 * d; ++p) {
        if (std::gcd(std::abs(p), d) != 1) continue;
        v.expect(is_closure_stable(support_strata(w, q(p, d))),
                 l.name() + " c=" + std::to_string(p) + "/" + std::to_string(d));
        ++cases;
      }
    }
  }
  v.detail << cases << " (W, c) pairs, c = p/q with q <= 12 and -1 <= c <= 3";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
      {"Poincare oracle equivalence", criterion1},
      {"finite-dimensionality lists", criterion2},
      {"Macdonald-Mehta numerics", criterion3},
      {"criterion chain", criterion4},
      {"two-parameter consistency", criterion5},
      {"trigonometric B2 example", criterion6},
      {"Dunkl oracle", criterion7},
      {"elliptic numbers", criterion8},
      {"closure stability", criterion9},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && v.pass;
    std::cout << "criterion " << i + 1 << " [" << (v.pass ? "PASS" : "FAIL") << "] " << criteria[i].first << ": "
              << v.checks << " checks, " << v.detail.str() << " (" << std::fixed << std::setprecision(1) << secs
              << " s)" << std::defaultfloat << std::endl;
  }
  return all ? 0 : 1;
}
