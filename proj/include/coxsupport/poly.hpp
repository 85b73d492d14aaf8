#pragma once

#include "coxsupport/cyclotomic.hpp"
#include "coxsupport/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace coxsupport {

inline int exp_add(int a, int b) { return a + b; }
inline std::array<int, 2> exp_add(const std::array<int, 2>& a, const std::array<int, 2>& b) {
  return {a[0] + b[0], a[1] + b[1]};
}

/// Sparse Laurent polynomial with integer coefficients; zero coefficients are never stored.
template <class Exp>
class LaurentPoly {
 public:
  using Terms = std::map<Exp, BigInt>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms) {
    for (auto& [e, c] : terms) add_term(e, c);
  }
  static LaurentPoly constant(long c) {
    LaurentPoly p;
    p.add_term(Exp{}, BigInt(c));
    return p;
  }
  static LaurentPoly monomial(const Exp& e, const BigInt& c = 1) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }
  void add_term(const Exp& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  /// Sum of coefficients, i.e. the value at 1 (or (1,1)).
  BigInt coefficient_sum() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) {
    for (const auto& [e, c] : y.terms_) x.add_term(e, c);
    return x;
  }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) {
    for (const auto& [e, c] : y.terms_) x.add_term(e, -c);
    return x;
  }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly r;
    for (const auto& [e1, c1] : x.terms_) {
      for (const auto& [e2, c2] : y.terms_) r.add_term(exp_add(e1, e2), c1 * c2);
    }
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) { return x.terms_ == y.terms_; }

 private:
  Terms terms_;
};

using UniPoly = LaurentPoly<int>;
using BiLaurent = LaurentPoly<std::array<int, 2>>;

/// Product of (1 + q + ... + q^{n-1}) = (1 - q^n)/(1 - q).
UniPoly q_integer(int n);
/// 1 - q1^u q2^v.
BiLaurent binomial(int u, int v);

int degree(const UniPoly& p);
/// Human-readable form such as "1 + 2q + q^2" (variable names configurable).
std::string to_string(const UniPoly& p, const std::string& var = "q");
std::string to_string(const BiLaurent& p);

struct DivisionResult {
  bool exact = false;
  UniPoly quotient;
  UniPoly remainder;
};

/// Division of polynomials with nonnegative exponents over Z. Reports the
/// remainder when B does not divide A; throws std::invalid_argument if B = 0.
DivisionResult poly_div_exact(const UniPoly& a, const UniPoly& b);

/// Exact division of A by (1 - q1^u q2^v) with u, v >= 0 not both zero;
/// nullopt if the binomial does not divide A.
std::optional<BiLaurent> divide_by_binomial(const BiLaurent& a, int u, int v);

CycloNum cyclo_eval(const UniPoly& p, const CycloNum& q);
CycloNum cyclo_eval(const BiLaurent& p, const CycloNum& q1, const CycloNum& q2);
/// Value at q = exp(2 pi i t), reducing exponents modulo the order of q first.
CycloNum cyclo_eval_root(const UniPoly& p, const Rational& t);
CycloNum cyclo_eval_root(const BiLaurent& p, const Rational& t1, const Rational& t2);

/// Affine line a1 z1 + a2 z2 = b in the parameter plane; "positive" when
/// a1, a2 >= 0 (not both zero, coprime) and b > 0.
struct PositiveLine {
  long a1 = 0;
  long a2 = 0;
  Rational b;

  /// Throws std::invalid_argument unless the positivity conditions hold.
  void validate() const;
  bool contains(const Rational& z1, const Rational& z2) const { return a1 * z1 + a2 * z2 == b; }
  std::string to_string() const;
};

/// Univariate Laurent polynomial in u with cyclotomic coefficients.
struct LineRestriction {
  std::map<int, CycloNum> terms;
  bool is_identically_zero() const { return terms.empty(); }
};

/// Substitutes q1 -> zeta1 u^{a2}, q2 -> zeta2 u^{-a1} with zeta_j = exp(2 pi i c_j),
/// parametrizing exp(2 pi i z) along the line through c. Throws if c is off the line.
LineRestriction restrict_to_line(const BiLaurent& q, const Rational& c1, const Rational& c2,
                                 const PositiveLine& line);

}  // namespace coxsupport
