#include "coxsupport/trig.hpp"

#include "coxsupport/poincare.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace coxsupport {

bool TorusPoint::uses_e_basis(const CoxeterLabel& l) { return l.family == Family::B || l.family == Family::D; }

std::vector<Rational> TorusPoint::simple_values() const {
  const auto n = static_cast<std::size_t>(label.rank);
  if (x.size() != n) {
    throw std::invalid_argument("torus point for " + label.name() + " needs " + std::to_string(n) + " coordinates");
  }
  if (!uses_e_basis(label)) return x;
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i + 1 < n; ++i) v[i] = x[i] - x[i + 1];
  v[n - 1] = label.family == Family::B ? x[n - 1] : x[n - 2] + x[n - 1];
  return v;
}

TorusPoint TorusPoint::from_simple_values(const CoxeterLabel& l, const std::vector<Rational>& values) {
  TorusPoint p{l, values};
  if (!uses_e_basis(l)) return p;
  const auto n = values.size();
  std::vector<Rational> x(n);
  if (l.family == Family::B) {
    x[n - 1] = values[n - 1];
  } else {
    x[n - 2] = (values[n - 2] + values[n - 1]) / 2;
    x[n - 1] = (values[n - 1] - values[n - 2]) / 2;
  }
  const std::size_t start = l.family == Family::B ? n - 1 : n - 2;
  for (std::size_t i = start; i-- > 0;) x[i] = values[i] + x[i + 1];
  p.x = x;
  return p;
}

std::string TorusPoint::torus_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) s += ", ";
    Rational f = frac_of(x[k]);
    if (f == 0) {
      s += "1";
    } else if (f == Rational(1, 2)) {
      s += "-1";
    } else {
      s += "e^{2πi·" + format_rational(f) + "}";
    }
  }
  return s + ")";
}

namespace {

const RootSystem& crystallographic_system(const CoxeterLabel& l) {
  if (!l.crystallographic()) {
    throw ScopeError("torus stabilizers need a Weyl group; " + l.name() + " is not crystallographic");
  }
  return root_system(l);
}

}  // namespace

Stabilizer stabilizer_subsystem(const TorusPoint& p) {
  const RootSystem& rs = crystallographic_system(p.label);
  const auto v = p.simple_values();
  Stabilizer st;
  for (int k = 0; k < rs.num_positive; ++k) {
    Rational val = 0;
    const auto& r = rs.int_coords[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < r.size(); ++i) val += r[i] * v[i];
    if (is_integer(val)) st.roots.push_back(k);
  }
  st.type = st.roots.empty() ? CoxeterType::from_factors({}, p.label.two_class()) : identify_subsystem(rs, st.roots);
  return st;
}

bool in_trig_support(const TorusPoint& p, const Rational& c) {
  if (c <= 0) throw ScopeError("the torus support criterion needs c > 0 (got " + format_rational(c) + ")");
  const Stabilizer st = stabilizer_subsystem(p);
  if (is_integer(c)) return true;  // the ratio at q = 1 is the index
  const int m = static_cast<int>(denominator_of(c));
  return a_count(CoxeterType::single(p.label), m) == a_count(st.type, m);
}

std::vector<TrigStratum> trig_support_strata(const CoxeterLabel& l, const Rational& c) {
  const RootSystem& rs = crystallographic_system(l);
  if (rs.rank > 4) throw ScopeError("torus strata are enumerated for rank <= 4 only");
  if (c <= 0) throw ScopeError("the torus support criterion needs c > 0 (got " + format_rational(c) + ")");
  const int r = rs.rank;
  // Highest root: coefficients n_k of theta = sum n_k alpha_k.
  std::vector<int> mark;
  int best = -1;
  for (const auto& v : rs.int_coords) {
    int h = 0;
    for (int x : v) h += x;
    if (h > best) {
      best = h;
      mark = v;
    }
  }
  const unsigned full = (1u << (r + 1)) - 1;
  std::vector<unsigned> ks;  // complements K of the fixed node sets, nonempty
  for (unsigned k = 1; k <= full; ++k) ks.push_back(k);
  std::stable_sort(ks.begin(), ks.end(), [](unsigned a, unsigned b) {
    return __builtin_popcount(a) != __builtin_popcount(b) ? __builtin_popcount(a) < __builtin_popcount(b) : a < b;
  });
  std::map<std::string, std::size_t> seen;
  std::vector<TrigStratum> out;
  for (unsigned k : ks) {
    const int size = __builtin_popcount(k);
    std::vector<Rational> values(static_cast<std::size_t>(r));
    for (int j = 1; j <= r; ++j) {
      if (k >> j & 1u) values[static_cast<std::size_t>(j - 1)] = make_rational(1, mark[static_cast<std::size_t>(j - 1)] * size);
    }
    TorusPoint p = TorusPoint::from_simple_values(l, values);
    Stabilizer st = stabilizer_subsystem(p);
    std::string key = st.type.name();
    if (seen.count(key)) continue;
    seen.emplace(key, out.size());
    TrigStratum ts{st.type, p, {}, in_trig_support(p, c)};
    for (int j = 0; j <= r; ++j) {
      if (!(k >> j & 1u)) ts.extended_nodes.push_back(j);
    }
    out.push_back(std::move(ts));
  }
  return out;
}

}  // namespace coxsupport
