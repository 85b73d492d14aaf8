#include "coxsupport/elliptic.hpp"

#include "coxsupport/linalg.hpp"
#include "coxsupport/poincare.hpp"

#include <stdexcept>
#include <string>

namespace coxsupport {

bool is_elliptic_number(const CoxeterType& w, int m) {
  if (m < 2) throw std::invalid_argument("elliptic numbers need m >= 2, got " + std::to_string(m));
  int a = a_count(w, m);
  for (const auto& p : maximal_parabolics(w)) {
    if (a_count(p.degrees, m) >= a) return false;
  }
  return true;
}

bool is_regular_number(const CoxeterType& w, int m) {
  if (m < 1) throw std::invalid_argument("regular numbers need m >= 1, got " + std::to_string(m));
  int deg = 0;
  int codeg = 0;
  for (int d : w.degrees()) {
    if (d % m == 0) ++deg;
    if ((d - 2) % m == 0) ++codeg;
  }
  return deg == codeg;
}

EigenSearch brute_force_search(const CoxeterLabel& label, int m, long cap) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  const RootSystem& rs = root_system(label);
  auto elements = enumerate_elements(label, cap);
  int n = rs.rank;
  CycloNum z = CycloNum::zeta(m);

  // Row k: the functional v -> (alpha_k, v) in simple-root coordinates.
  std::vector<std::vector<CycloNum>> functionals;
  for (int k = 0; k < rs.num_positive; ++k) {
    std::vector<CycloNum> row(n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) row[j] += rs.roots[k][i] * rs.gram[i][j];
    }
    functionals.push_back(std::move(row));
  }

  EigenSearch out;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    const auto& g = elements[e];
    if (g.order() % m != 0) continue;
    Matrix a = g.matrix(rs);
    for (int i = 0; i < n; ++i) a[i][i] -= z;
    auto basis = nullspace(a);
    if (basis.empty()) continue;
    EigenReport r;
    r.element = e;
    r.m = m;
    r.dimension = static_cast<int>(basis.size());
    r.regular = true;
    for (const auto& f : functionals) {
      bool vanishes = true;
      for (const auto& v : basis) {
        CycloNum s;
        for (int j = 0; j < n; ++j) s += f[j] * v[j];
        if (!s.is_zero()) {
          vanishes = false;
          break;
        }
      }
      if (vanishes) {
        r.regular = false;
        break;
      }
    }
    r.elliptic = g.is_elliptic(rs);
    out.regular = out.regular || r.regular;
    out.regular_elliptic = out.regular_elliptic || (r.regular && r.elliptic);
    out.max_dimension = std::max(out.max_dimension, r.dimension);
    out.reports.push_back(r);
  }
  return out;
}

}  // namespace coxsupport
