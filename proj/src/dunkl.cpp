#include "coxsupport/dunkl.hpp"

#include "coxsupport/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace coxsupport {

// ------------------------------------------------------------ GradedPoly

GradedPoly GradedPoly::constant(int nvars, const CycloNum& c) {
  GradedPoly p(nvars);
  p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

GradedPoly GradedPoly::variable(int nvars, int i) {
  Monomial e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(e);
}

GradedPoly GradedPoly::monomial(const Monomial& e, const CycloNum& c) {
  GradedPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

int GradedPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

bool GradedPoly::is_homogeneous() const {
  int d = degree();
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    if (s != d) return false;
  }
  return true;
}

GradedPoly GradedPoly::part(int d) const {
  GradedPoly p(nvars_);
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    if (s == d) p.terms_.emplace(e, c);
  }
  return p;
}

CycloNum GradedPoly::constant_term() const { return coefficient(Monomial(static_cast<std::size_t>(nvars_), 0)); }

CycloNum GradedPoly::coefficient(const Monomial& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CycloNum(0) : it->second;
}

void GradedPoly::add_term(const Monomial& e, const CycloNum& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("monomial arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedPoly GradedPoly::derivative(int i) const {
  GradedPoly p(nvars_);
  const auto k = static_cast<std::size_t>(i);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Monomial f = e;
    --f[k];
    p.add_term(f, CycloNum(e[k]) * c);
  }
  return p;
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
    }
    const CycloNum& c = it->second;
    if (mono.empty()) {
      os << c.to_string();
    } else if (c == CycloNum(1)) {
      os << mono;
    } else {
      os << "(" << c.to_string() << ")*" << mono;
    }
  }
  return os.str();
}

GradedPoly operator+(GradedPoly x, const GradedPoly& y) {
  for (const auto& [e, c] : y.terms_) x.add_term(e, c);
  return x;
}

GradedPoly operator-(GradedPoly x, const GradedPoly& y) {
  for (const auto& [e, c] : y.terms_) x.add_term(e, -c);
  return x;
}

GradedPoly operator*(const GradedPoly& x, const GradedPoly& y) {
  GradedPoly p(x.nvars_);
  for (const auto& [e, c] : x.terms_) {
    for (const auto& [f, d] : y.terms_) {
      Monomial g = e;
      for (std::size_t i = 0; i < g.size(); ++i) g[i] += f[i];
      p.add_term(g, c * d);
    }
  }
  return p;
}

GradedPoly operator*(const CycloNum& c, const GradedPoly& x) {
  GradedPoly p(x.nvars_);
  if (c.is_zero()) return p;
  for (const auto& [e, d] : x.terms_) p.terms_.emplace(e, c * d);
  return p;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  Monomial e(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
  };
  if (nvars > 0) rec(rec, 0, d);
  return out;
}

// ------------------------------------------------------------ DunklSystem

DunklSystem::DunklSystem(const CoxeterLabel& label, const Rational& c1, const Rational& c2)
    : label_(label), rs_(&root_system(label)), c1_(c1), c2_(label.two_class() ? c2 : c1) {
  const int n = rs_->rank;
  gram_inverse_ = inverse(rs_->gram);
  for (int k = 0; k < rs_->num_positive; ++k) {
    std::vector<CycloNum> row(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) row[i] = rs_->inner(rs_->roots[k], rs_->roots[i]);
    root_pairing_.push_back(std::move(row));
    GradedPoly form(n);
    for (int i = 0; i < n; ++i) form = form + rs_->roots[k][i] * GradedPoly::variable(n, i);
    root_forms_.push_back(std::move(form));
    // x_i(s v) = (s alpha_i, v), a linear form with the coordinates of s alpha_i.
    std::vector<GradedPoly> images;
    for (int i = 0; i < n; ++i) {
      GradedPoly lin(n);
      const RootVec& img = rs_->roots[static_cast<std::size_t>(rs_->reflect_root(k, i))];
      for (int j = 0; j < n; ++j) lin = lin + img[j] * GradedPoly::variable(n, j);
      images.push_back(std::move(lin));
    }
    reflected_vars_.push_back(std::move(images));
  }
}

GradedPoly DunklSystem::root_form(int k) const { return root_forms_[static_cast<std::size_t>(k)]; }

GradedPoly DunklSystem::reflect(int k, const GradedPoly& p) const {
  const int n = rank();
  std::vector<std::vector<GradedPoly>> powers(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    powers[i].push_back(GradedPoly::constant(n, CycloNum(1)));
    powers[i].push_back(reflected_vars_[k][i]);
  }
  GradedPoly out(n);
  for (const auto& [e, c] : p.terms()) {
    GradedPoly term = GradedPoly::constant(n, c);
    for (int i = 0; i < n; ++i) {
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * pw[1]);
      if (e[i] > 0) term = term * pw[e[i]];
    }
    out = out + term;
  }
  return out;
}

GradedPoly DunklSystem::divide_by_root(const GradedPoly& p, int k) const {
  const int n = rank();
  const RootVec& a = rs_->roots[k];
  int pivot = n - 1;
  while (pivot >= 0 && a[pivot].is_zero()) --pivot;
  const auto pv = static_cast<std::size_t>(pivot);
  const CycloNum lead_inv = a[pivot].inverse();
  GradedPoly rest = p;
  GradedPoly quotient(n);
  while (!rest.is_zero()) {
    // Term with the largest power of the pivot variable.
    auto best = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
      if (it->first[pv] > best->first[pv]) best = it;
    }
    if (best->first[pv] == 0) throw std::logic_error("polynomial not divisible by root form");
    Monomial e = best->first;
    --e[pv];
    GradedPoly t = GradedPoly::monomial(e, best->second * lead_inv);
    quotient = quotient + t;
    rest = rest - t * root_forms_[static_cast<std::size_t>(k)];
  }
  return quotient;
}

GradedPoly DunklSystem::dunkl(const RootVec& a, const GradedPoly& p) const {
  const int n = rank();
  GradedPoly out(n);
  for (int j = 0; j < n; ++j) {
    CycloNum pair = rs_->inner(rs_->roots[j], a);
    if (!pair.is_zero()) out = out + pair * p.derivative(j);
  }
  for (int k = 0; k < rs_->num_positive; ++k) {
    const CycloNum& c = parameter(rs_->root_class[k]);
    if (c.is_zero()) continue;
    CycloNum pair = rs_->inner(rs_->roots[k], a);
    if (pair.is_zero()) continue;
    GradedPoly diff = p - reflect(k, p);
    if (diff.is_zero()) continue;
    out = out - (c * pair) * divide_by_root(diff, k);
  }
  return out;
}

GradedPoly DunklSystem::dunkl(int i, const GradedPoly& p) const { return dunkl(rs_->roots[i], p); }

GradedPoly DunklSystem::apply_polynomial(const GradedPoly& p, const GradedPoly& q) const {
  std::vector<Monomial> es;
  for (const auto& [e, c] : p.terms()) es.push_back(e);
  auto images = apply_monomials(es, q);
  GradedPoly out(rank());
  std::size_t k = 0;
  for (const auto& [e, c] : p.terms()) out = out + c * images[k++];
  return out;
}

std::vector<GradedPoly> DunklSystem::apply_monomials(const std::vector<Monomial>& es, const GradedPoly& q) const {
  const int n = rank();
  std::map<Monomial, GradedPoly> memo;
  memo.emplace(Monomial(static_cast<std::size_t>(n), 0), q);
  auto apply = [&](auto&& self, const Monomial& e) -> const GradedPoly& {
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    int i = 0;
    while (e[i] == 0) ++i;
    Monomial f = e;
    --f[i];
    GradedPoly r = dunkl(i, self(self, f));
    return memo.emplace(e, std::move(r)).first->second;
  };
  std::vector<GradedPoly> out;
  for (const auto& e : es) out.push_back(apply(apply, e));
  return out;
}

CycloNum DunklSystem::beta(const GradedPoly& p, const GradedPoly& q) const {
  return apply_polynomial(p, q).constant_term();
}

GradedPoly DunklSystem::exp_f(const GradedPoly& p) const {
  const int n = rank();
  auto f = [&](const GradedPoly& v) {
    GradedPoly out(n);
    for (int i = 0; i < n; ++i) {
      GradedPoly ti = dunkl(i, v);
      for (int j = 0; j < n; ++j) {
        if (gram_inverse_[i][j].is_zero()) continue;
        out = out + (gram_inverse_[i][j] * CycloNum(Rational(1, 2))) * dunkl(j, ti);
      }
    }
    return out;
  };
  GradedPoly sum = p;
  GradedPoly term = p;
  for (long k = 1; !term.is_zero(); ++k) {
    term = CycloNum(make_rational(1, k)) * f(term);
    sum = sum + term;
  }
  return sum;
}

CycloNum DunklSystem::gaussian(const GradedPoly& p, const GradedPoly& q) const {
  return beta(exp_f(p), exp_f(q));
}

// ------------------------------------------------------------ oracles

std::optional<RelationViolation> check_relations(const DunklSystem& sys, int dmax) {
  const RootSystem& rs = sys.roots();
  const int n = rs.rank;
  for (int d = 0; d <= dmax; ++d) {
    for (const auto& e : monomials_of_degree(n, d)) {
      GradedPoly p = GradedPoly::monomial(e);
      std::vector<GradedPoly> reflected;
      for (int k = 0; k < rs.num_positive; ++k) reflected.push_back(sys.reflect(k, p));
      for (int a = 0; a < n; ++a) {
        GradedPoly ta = sys.dunkl(a, p);
        for (int b = 0; b < n; ++b) {
          GradedPoly xb = GradedPoly::variable(n, b);
          GradedPoly lhs = sys.dunkl(a, xb * p) - xb * ta;
          GradedPoly rhs = rs.gram[a][b] * p;
          for (int k = 0; k < rs.num_positive; ++k) {
            const CycloNum& c = sys.parameter(rs.root_class[k]);
            CycloNum norm = rs.inner(rs.roots[k], rs.roots[k]);
            CycloNum coef = c * rs.inner(rs.roots[k], rs.roots[a]) * rs.inner(rs.roots[k], rs.roots[b]) *
                            CycloNum(2) / norm;
            rhs = rhs - coef * reflected[k];
          }
          if (!(lhs == rhs)) return RelationViolation{a, b, e};
        }
      }
    }
  }
  return std::nullopt;
}

GramTable beta_gram(const DunklSystem& sys, int dmax) {
  const int n = sys.rank();
  if (n > 3 && sys.label().family != Family::I) throw ScopeError("Gram tables are limited to rank <= 3");
  GramTable g;
  std::map<Monomial, std::size_t> prev_index;
  for (int d = 0; d <= dmax; ++d) {
    auto basis = monomials_of_degree(n, d);
    if (basis.size() > kGramBasisCap) {
      throw ScopeError("degree " + std::to_string(d) + " has " + std::to_string(basis.size()) +
                       " monomials, above the cap " + std::to_string(kGramBasisCap));
    }
    const std::size_t size = basis.size();
    Matrix m(size, std::vector<CycloNum>(size));
    if (d == 0) {
      m[0][0] = CycloNum(1);
    } else {
      // beta(x_i P, Q) = beta(P, T_i Q): row x_i e' is row e' of the previous block times T_i.
      const Matrix& prev = g.blocks.back();
      std::vector<Matrix> ti(static_cast<std::size_t>(n));  // ti[i][col][prev monomial]
      for (int i = 0; i < n; ++i) {
        for (const auto& e : basis) {
          GradedPoly image = sys.dunkl(i, GradedPoly::monomial(e));
          std::vector<CycloNum> col(prev.size());
          for (const auto& [f, c] : image.terms()) col[prev_index.at(f)] = c;
          ti[i].push_back(std::move(col));
        }
      }
      for (std::size_t r = 0; r < size; ++r) {
        int i = 0;
        while (basis[r][i] == 0) ++i;
        Monomial e = basis[r];
        --e[i];
        const auto& row = prev[prev_index.at(e)];
        for (std::size_t j = 0; j < size; ++j) {
          CycloNum s;
          for (std::size_t k = 0; k < row.size(); ++k) {
            if (!row[k].is_zero() && !ti[i][j][k].is_zero()) s += row[k] * ti[i][j][k];
          }
          m[r][j] = s;
        }
      }
    }
    g.ranks.push_back(exact_rank(m));
    g.blocks.push_back(std::move(m));
    prev_index.clear();
    for (std::size_t k = 0; k < size; ++k) prev_index.emplace(basis[k], k);
    g.bases.push_back(std::move(basis));
  }
  return g;
}

QuotientMeasure measure_quotient(const DunklSystem& sys, int dmax) {
  QuotientMeasure q;
  q.window = sys.roots().num_positive + 1;
  q.ranks = beta_gram(sys, dmax).ranks;
  for (int r : q.ranks) q.dimension += r;
  int zeros = 0;
  for (auto it = q.ranks.rbegin(); it != q.ranks.rend() && *it == 0; ++it) ++zeros;
  q.finite = zeros >= q.window;
  return q;
}

// ------------------------------------------------------------ symbolic c

Rational evaluate(const CPoly& p, const Rational& c) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * c + *it;
  return v;
}

namespace {

void check_symbolic_scope(const CoxeterLabel& label, int degree) {
  if (!label.crystallographic() || label.rank > 2) {
    throw ScopeError("symbolic c is limited to crystallographic groups of rank <= 2");
  }
  if (degree > 6) throw ScopeError("symbolic c is limited to degree <= 6");
}

/// Newton interpolation through (k, values[k]), k = 0..N, expanded to monomial form.
CPoly interpolate(const std::vector<Rational>& values) {
  const std::size_t n = values.size();
  std::vector<Rational> dd = values;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(j));
  }
  CPoly p{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // p <- p * (c - k) + dd[k]
    CPoly next(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= p[i] * Rational(static_cast<long>(k));
    }
    next[0] += dd[k];
    p = std::move(next);
  }
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

/// Interpolates f on c = 0..bound and confirms the result at c = bound + 1.
template <class F>
CPoly fit(F f, int bound) {
  std::vector<Rational> values;
  for (int k = 0; k <= bound; ++k) values.push_back(f(Rational(k)));
  CPoly p = interpolate(values);
  if (evaluate(p, Rational(bound + 1)) != f(Rational(bound + 1))) {
    throw std::logic_error("degree bound too small for symbolic interpolation");
  }
  return p;
}

}  // namespace

std::vector<std::vector<std::vector<CPoly>>> beta_gram_symbolic(const CoxeterLabel& label, int dmax) {
  check_symbolic_scope(label, dmax);
  std::vector<GramTable> samples;
  for (int k = 0; k <= dmax + 1; ++k) samples.push_back(beta_gram(DunklSystem(label, Rational(k)), dmax));
  std::vector<std::vector<std::vector<CPoly>>> out;
  for (int d = 0; d <= dmax; ++d) {
    const std::size_t size = samples[0].bases[d].size();
    std::vector<std::vector<CPoly>> block(size, std::vector<CPoly>(size));
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        block[i][j] = fit(
            [&](const Rational& c) {
              return samples[static_cast<std::size_t>(c.get_num().get_si())].blocks[d][i][j].rational_value();
            },
            d);
      }
    }
    out.push_back(std::move(block));
  }
  return out;
}

CPoly gaussian_symbolic(const CoxeterLabel& label, const GradedPoly& p, const GradedPoly& q) {
  const int bound = std::max(p.degree(), 0) + std::max(q.degree(), 0);
  check_symbolic_scope(label, std::max(p.degree(), q.degree()));
  return fit([&](const Rational& c) { return DunklSystem(label, c).gaussian(p, q).rational_value(); }, bound);
}

}  // namespace coxsupport
