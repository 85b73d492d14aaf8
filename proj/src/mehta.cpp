#include "coxsupport/mehta.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace coxsupport {

namespace {

bool nonpositive_integer(const Rational& x) { return x <= 0 && is_integer(x); }

std::string gamma_list(const std::vector<Rational>& args) {
  std::string s;
  for (const auto& a : args) s += "Γ(" + format_rational(a) + ")";
  return s;
}

}  // namespace

void GammaProduct::cancel() {
  std::sort(numerator.begin(), numerator.end());
  std::sort(denominator.begin(), denominator.end());
  std::vector<Rational> num, den;
  std::size_t i = 0, j = 0;
  while (i < numerator.size() || j < denominator.size()) {
    if (j == denominator.size() || (i < numerator.size() && numerator[i] < denominator[j])) {
      num.push_back(numerator[i++]);
    } else if (i == numerator.size() || denominator[j] < numerator[i]) {
      den.push_back(denominator[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  numerator = std::move(num);
  denominator = std::move(den);
}

void GammaProduct::multiply_by(const GammaProduct& other) {
  numerator.insert(numerator.end(), other.numerator.begin(), other.numerator.end());
  denominator.insert(denominator.end(), other.denominator.begin(), other.denominator.end());
  cancel();
}

int GammaProduct::order() const {
  auto hits = [](const std::vector<Rational>& v) {
    return static_cast<int>(std::count_if(v.begin(), v.end(), nonpositive_integer));
  };
  return hits(numerator) - hits(denominator);
}

double GammaProduct::value() const {
  double log_abs = 0;
  int sign = 1;
  for (int side = 0; side < 2; ++side) {
    for (const auto& a : side == 0 ? numerator : denominator) {
      if (nonpositive_integer(a)) {
        throw std::domain_error("Gamma argument " + format_rational(a) + " is a pole; no finite value here");
      }
      int s = 1;
      double l = boost::math::lgamma(a.get_d(), &s);
      log_abs += side == 0 ? l : -l;
      sign *= s;
    }
  }
  return sign * std::exp(log_abs);
}

std::string GammaProduct::to_string() const {
  std::string num = numerator.empty() ? "1" : gamma_list(numerator);
  if (denominator.empty()) return num;
  std::string den = gamma_list(denominator);
  return num + "/" + (denominator.size() > 1 ? "(" + den + ")" : den);
}

GammaProduct mm_value(const CoxeterType& w, const Rational& c) {
  GammaProduct g;
  for (int d : w.degrees()) {
    g.numerator.push_back(1 - d * c);
    g.denominator.push_back(1 - c);
  }
  g.cancel();
  return g;
}

GammaProduct mm_value2(const CoxeterType& w, const Rational& c1_in, const Rational& c2_in) {
  if (!w.labeled && !w.two_class()) {
    throw std::invalid_argument(w.name() + " has no two-class structure; use the one-parameter value");
  }
  GammaProduct g;
  for (const Factor& f : w.factors) {
    const CoxeterLabel& l = f.label;
    if (!l.two_class()) {
      const int cls = f.node_class.empty() ? 1 : f.node_class[0];
      g.multiply_by(mm_value(CoxeterType::single(l), cls == 1 ? c1_in : c2_in));
      continue;
    }
    const Rational& c1 = f.swapped() ? c2_in : c1_in;
    const Rational& c2 = f.swapped() ? c1_in : c2_in;
    GammaProduct h;
    if (l.family == Family::I) {
      const int m = l.p / 2;
      h.numerator = {1 - 2 * c1, 1 - 2 * c2, 1 - m * (c1 + c2)};
      h.denominator = {1 - c1, 1 - c2, 1 - (c1 + c2)};
    } else {
      const RootSystem& rs = root_system(l);
      for (int k = 0; k < rs.num_positive; ++k) {
        auto ht = rs.heights[static_cast<std::size_t>(k)];
        Rational base = c1 * ht[0] + c2 * ht[1];
        const Rational& ca = rs.root_class[static_cast<std::size_t>(k)] == 1 ? c1 : c2;
        h.numerator.push_back(1 - ca - base);
        h.denominator.push_back(1 - base);
      }
    }
    g.multiply_by(h);
  }
  g.cancel();
  return g;
}

bool mm_ratio_nonzero(const CoxeterType& w, const CoxeterType& wa, const Rational& c) {
  return mm_value(wa, c).order() == mm_value(w, c).order();
}

bool mm_ratio_nonzero2(const CoxeterType& w, const CoxeterType& wa, const Rational& c1, const Rational& c2) {
  CoxeterType wl = w, al = wa;
  wl.labeled = al.labeled = true;
  return mm_value2(al, c1, c2).order() == mm_value2(wl, c1, c2).order();
}

// ------------------------------------------------------------------ numerics

RealFrame real_frame(const CoxeterLabel& l) {
  const RootSystem& rs = root_system(l);
  const auto n = static_cast<std::size_t>(rs.rank);
  std::vector<std::vector<double>> g(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g[i][j] = rs.gram[i][j].to_complex().real();
  }
  // Cholesky factor: alpha_i = row i of L.
  std::vector<std::vector<double>> lo(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = g[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= lo[i][k] * lo[j][k];
      lo[i][j] = i == j ? std::sqrt(s) : s / lo[j][j];
    }
  }
  RealFrame f;
  f.rank = rs.rank;
  f.simple = lo;
  for (int k = 0; k < rs.num_positive; ++k) {
    std::vector<double> v(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double ci = rs.roots[static_cast<std::size_t>(k)][i].to_complex().real();
      for (std::size_t j = 0; j < n; ++j) v[j] += ci * lo[i][j];
    }
    double len2 = 0;
    for (double x : v) len2 += x * x;
    const double scale = std::sqrt(2.0 / len2);
    for (double& x : v) x *= scale;
    f.roots.push_back(v);
    f.root_class.push_back(rs.root_class[static_cast<std::size_t>(k)]);
  }
  return f;
}

namespace {

double weight(const RealFrame& fr, double c1, double c2, const std::vector<double>& x) {
  double w = 1;
  for (std::size_t k = 0; k < fr.roots.size(); ++k) {
    double a = 0;
    for (std::size_t i = 0; i < x.size(); ++i) a += fr.roots[k][i] * x[i];
    w *= std::pow(std::abs(a), -2 * (fr.root_class[k] == 1 ? c1 : c2));
  }
  return w;
}

}  // namespace

NumericResult weighted_integral(const CoxeterLabel& l, double c1, double c2,
                                const std::function<double(const std::vector<double>&)>& f, Quadrature method,
                                double tol, long samples) {
  if (c1 > 0 || c2 > 0) throw std::invalid_argument("the integral converges only for c <= 0");
  const RealFrame fr = real_frame(l);
  if (fr.rank > 2) throw ScopeError("numeric integration is limited to rank <= 2");
  if (!l.two_class()) c2 = c1;
  const double norm = std::pow(2 * std::numbers::pi, -fr.rank / 2.0);
  NumericResult out;

  if (method == Quadrature::MonteCarlo) {
    std::mt19937_64 rng(20240601);
    std::normal_distribution<double> gauss;
    std::vector<double> x(static_cast<std::size_t>(fr.rank));
    double sum = 0, sum2 = 0;
    for (long s = 0; s < samples; ++s) {
      for (double& xi : x) xi = gauss(rng);
      double v = weight(fr, c1, c2, x) * f(x);
      sum += v;
      sum2 += v * v;
    }
    const double mean = sum / static_cast<double>(samples);
    out.value = mean;
    out.error = std::sqrt(std::max(0.0, sum2 / static_cast<double>(samples) - mean * mean) / static_cast<double>(samples));
    return out;
  }

  boost::math::quadrature::exp_sinh<double> radial;
  if (fr.rank == 1) {
    auto g = [&](double r) {
      const double e = std::exp(-r * r / 2);
      if (e == 0) return 0.0;
      std::vector<double> xp{r}, xm{-r};
      return e * weight(fr, c1, c2, xp) * (f(xp) + f(xm));
    };
    double err = 0;
    out.value = norm * radial.integrate(g, tol, &err);
    out.error = norm * err;
    return out;
  }

  // Split the circle at the hyperplanes, where the weight is not smooth.
  std::vector<double> cuts{0.0, 2 * std::numbers::pi};
  for (const auto& a : fr.roots) {
    double t = std::atan2(a[0], -a[1]);
    for (double u : {t, t + std::numbers::pi, t - std::numbers::pi, t + 2 * std::numbers::pi}) {
      if (u > 1e-12 && u < 2 * std::numbers::pi - 1e-12) cuts.push_back(u);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(), [](double a, double b) { return b - a < 1e-12; }), cuts.end());

  boost::math::quadrature::tanh_sinh<double> angular;
  double total = 0, total_err = 0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    auto ring = [&](double theta) {
      const double ct = std::cos(theta), st = std::sin(theta);
      auto g = [&](double r) {
        const double e = std::exp(-r * r / 2);
        if (e == 0) return 0.0;
        std::vector<double> x{r * ct, r * st};
        return e * weight(fr, c1, c2, x) * f(x) * r;
      };
      return radial.integrate(g, tol);
    };
    double err = 0;
    total += angular.integrate(ring, cuts[k], cuts[k + 1], tol, &err);
    total_err += err;
  }
  out.value = norm * total;
  out.error = norm * total_err;
  return out;
}

NumericResult mm_numeric(const CoxeterLabel& l, double c1, double c2, Quadrature method, double tol) {
  return weighted_integral(l, c1, c2, [](const std::vector<double>&) { return 1.0; }, method, tol);
}

}  // namespace coxsupport
