#pragma once

#include "coxsupport/coxeter.hpp"
#include "coxsupport/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coxsupport {

using Monomial = std::vector<int>;

/// Polynomial on h in the variables x_i = (alpha_i, .), one per simple root,
/// with coefficients in the root field. Zero coefficients are never stored.
class GradedPoly {
 public:
  explicit GradedPoly(int nvars = 0) : nvars_(nvars) {}
  static GradedPoly constant(int nvars, const CycloNum& c);
  static GradedPoly variable(int nvars, int i);
  static GradedPoly monomial(const Monomial& e, const CycloNum& c = CycloNum(1));

  int nvars() const { return nvars_; }
  const std::map<Monomial, CycloNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  GradedPoly part(int d) const;
  CycloNum constant_term() const;
  CycloNum coefficient(const Monomial& e) const;
  void add_term(const Monomial& e, const CycloNum& c);
  /// d/dx_i.
  GradedPoly derivative(int i) const;
  std::string to_string() const;

  friend GradedPoly operator+(GradedPoly x, const GradedPoly& y);
  friend GradedPoly operator-(GradedPoly x, const GradedPoly& y);
  friend GradedPoly operator*(const GradedPoly& x, const GradedPoly& y);
  friend GradedPoly operator*(const CycloNum& c, const GradedPoly& x);
  friend bool operator==(const GradedPoly& x, const GradedPoly& y) = default;

 private:
  int nvars_;
  std::map<Monomial, CycloNum> terms_;
};

/// Exponent vectors of total degree d in n variables, lexicographically descending.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

/// Dunkl operators of an irreducible group on C[h] for class parameters (c1, c2).
/// Single-class groups use c1 for every reflection. Inner products are those of
/// the catalog Gram matrix; reflection terms are independent of root scaling and
/// the commutator uses the (alpha, alpha) = 2 normalization.
class DunklSystem {
 public:
  DunklSystem(const CoxeterLabel& label, const Rational& c1, const Rational& c2);
  DunklSystem(const CoxeterLabel& label, const Rational& c) : DunklSystem(label, c, c) {}

  const CoxeterLabel& label() const { return label_; }
  const RootSystem& roots() const { return *rs_; }
  int rank() const { return rs_->rank; }
  const CycloNum& parameter(int root_class) const { return root_class == 1 ? c1_ : c2_; }

  /// Positive root k as the linear polynomial (alpha_k, .).
  GradedPoly root_form(int k) const;
  /// (s_k P)(v) = P(s_k v) for the reflection in positive root k.
  GradedPoly reflect(int k, const GradedPoly& p) const;
  /// Exact quotient by root_form(k); throws std::logic_error if not divisible.
  GradedPoly divide_by_root(const GradedPoly& p, int k) const;
  /// T_a P for a direction a in simple-root coordinates.
  GradedPoly dunkl(const RootVec& a, const GradedPoly& p) const;
  /// T_{alpha_i} P.
  GradedPoly dunkl(int i, const GradedPoly& p) const;
  /// P(T) Q, substituting T_{alpha_i} for x_i.
  GradedPoly apply_polynomial(const GradedPoly& p, const GradedPoly& q) const;
  /// e(T) Q for every exponent vector e, sharing intermediate applications.
  std::vector<GradedPoly> apply_monomials(const std::vector<Monomial>& es, const GradedPoly& q) const;
  /// beta_c(P, Q) = (P(T) Q)(0).
  CycloNum beta(const GradedPoly& p, const GradedPoly& q) const;
  /// exp(f) P with f = (1/2) sum over an orthonormal basis of T_a^2.
  GradedPoly exp_f(const GradedPoly& p) const;
  /// gamma_c(P, Q) = beta_c(exp(f) P, exp(f) Q).
  CycloNum gaussian(const GradedPoly& p, const GradedPoly& q) const;

 private:
  CoxeterLabel label_;
  const RootSystem* rs_;
  CycloNum c1_, c2_;
  Matrix gram_inverse_;
  std::vector<GradedPoly> root_forms_;
  std::vector<std::vector<GradedPoly>> reflected_vars_;  ///< reflected_vars_[k][i] = s_k x_i
  std::vector<std::vector<CycloNum>> root_pairing_;  ///< root_pairing_[k][i] = (alpha_k, alpha_i)
};

/// First (a, b, monomial) where [T_a, x_b] differs from its defining value.
struct RelationViolation {
  int a = 0;
  int b = 0;
  Monomial monomial;
};

/// Checks [T_{alpha_a}, x_b] = (alpha_a, alpha_b) - sum_s c_s (alpha_s, alpha_a)(alpha_s, alpha_b) s
/// on every monomial of degree <= dmax.
std::optional<RelationViolation> check_relations(const DunklSystem& sys, int dmax = 6);

/// Gram matrices of beta_c on the monomial basis of each degree 0..dmax.
struct GramTable {
  std::vector<std::vector<Monomial>> bases;
  std::vector<Matrix> blocks;
  std::vector<int> ranks;
  int corank(int d) const { return static_cast<int>(bases[d].size()) - ranks[d]; }
};

/// Limit on basis monomials per degree.
constexpr std::size_t kGramBasisCap = 400;

/// Rank <= 3 or dihedral. Throws ScopeError beyond the basis cap.
GramTable beta_gram(const DunklSystem& sys, int dmax);

struct QuotientMeasure {
  bool finite = false;
  int dimension = 0;  ///< dim L_c when finite, otherwise the lower bound sum of ranks
  int window = 0;     ///< zero-rank degrees required at the top
  std::vector<int> ranks;
};

/// dim L_c = sum of Gram ranks, declared finite only when the top
/// (#reflections + 1) degrees up to dmax all have rank zero.
QuotientMeasure measure_quotient(const DunklSystem& sys, int dmax);

/// Polynomial in c with rational coefficients, lowest degree first.
using CPoly = std::vector<Rational>;
Rational evaluate(const CPoly& p, const Rational& c);

/// Equal-parameter Gram blocks with entries as polynomials in c, by exact
/// interpolation. Crystallographic rank <= 2 and dmax <= 6 only.
std::vector<std::vector<std::vector<CPoly>>> beta_gram_symbolic(const CoxeterLabel& label, int dmax);

/// gamma_c(P, Q) as a polynomial in c. Same scope as beta_gram_symbolic.
CPoly gaussian_symbolic(const CoxeterLabel& label, const GradedPoly& p, const GradedPoly& q);

}  // namespace coxsupport
