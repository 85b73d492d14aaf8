#pragma once

#include "coxsupport/coxeter.hpp"
#include "coxsupport/poly.hpp"

#include <array>
#include <map>
#include <string>

namespace coxsupport {

using Binomial = std::array<int, 2>;  ///< (u, v) standing for 1 - q1^u q2^v

/// Two-variable Poincare polynomial kept as a ratio of binomials.
struct FactoredBiPoincare {
  std::map<Binomial, int> numerator;
  std::map<Binomial, int> denominator;

  void multiply_by(const FactoredBiPoincare& other);
  /// Removes binomials common to numerator and denominator.
  void cancel();
  /// Expanded polynomial; every denominator binomial divides exactly.
  BiLaurent expand() const;
  std::string to_string() const;
};

/// Number of degrees divisible by m (m >= 1).
int a_count(const std::vector<int>& degrees, int m);
int a_count(const CoxeterType& t, int m);

/// prod (1 - q^{d_i}) / (1 - q), expanded.
UniPoly poincare1(const CoxeterType& t);

/// Two-variable form. Two-class factors use root heights (Weyl groups) or the
/// dihedral closed form; single-class factors of a labeled type contribute their
/// one-variable polynomial in q1 or q2. Throws std::invalid_argument for types
/// with no two-class structure.
FactoredBiPoincare poincare2(const CoxeterType& t);

/// Sum over the enumerated group of q^{l(w)}.
UniPoly poincare_bruteforce1(const CoxeterLabel& l, long cap = enumeration_cap());
/// Sum over the enumerated group of q1^{l1(w)} q2^{l2(w)}.
BiLaurent poincare_bruteforce2(const CoxeterLabel& l, long cap = enumeration_cap());

/// Exact quotient P_W / P_Wsub; `exact` is false when the claimed subgroup
/// cannot be a reflection subgroup.
DivisionResult poincare_ratio(const CoxeterType& w, const CoxeterType& wsub);

}  // namespace coxsupport
