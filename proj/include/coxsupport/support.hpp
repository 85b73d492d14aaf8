#pragma once

#include "coxsupport/coxeter.hpp"
#include "coxsupport/poincare.hpp"
#include "coxsupport/poly.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace coxsupport {

using ParamPair = std::pair<Rational, Rational>;

/// Stratum of points whose stabilizer is conjugate to a standard parabolic.
struct Stratum {
  ParabolicClass parabolic;
  int codimension = 0;  ///< rank of the stabilizer
  bool in_support = false;
};

// ------------------------------------------------------------ equal parameters

/// True if c <= 0 or c is an integer (M_c is then irreducible); otherwise
/// compares a_W(m) and a_Wa(m) for the denominator m of c.
bool in_support_equal(const CoxeterType& w, const CoxeterType& wa, const Rational& c);
std::vector<Stratum> support_strata(const CoxeterType& w, const Rational& c);
bool is_finite_dim_equal(const CoxeterType& w, const Rational& c);
/// Denominators 2 <= m <= m_max for which L_c is finite dimensional.
std::set<int> finite_dim_denominators(const CoxeterType& w, int m_max);

/// Support is a closed union of strata: whenever a stratum is in the support,
/// so is every stratum of a standard parabolic containing it.
bool is_closure_stable(const std::vector<Stratum>& strata);

// ------------------------------------------------------------ two parameters

/// Number of binomials (u, v) of f parallel to the line with u c1 + v c2 an
/// integer, numerator minus denominator. Requires c on the line.
int vanish_order_on_line(const FactoredBiPoincare& f, const ParamPair& c, const PositiveLine& line);

/// Positive lines through c along the binomial directions of both forms.
std::vector<PositiveLine> candidate_lines(const FactoredBiPoincare& fw, const FactoredBiPoincare& fa,
                                          const ParamPair& c);

/// Result of the positive-line test: `line` is the witness on which the ratio
/// vanishes identically when the stratum is excluded.
struct LineVerdict {
  bool in_support = true;
  std::optional<PositiveLine> line;
};

/// Only irreducible two-class types (I2(2m), B_n, F4, G2). Wa must be a labeled
/// parabolic class of W.
LineVerdict in_support_two(const CoxeterType& w, const CoxeterType& wa, const ParamPair& c);
std::vector<Stratum> support_strata_two(const CoxeterType& w, const ParamPair& c);
bool is_finite_dim_two(const CoxeterType& w, const ParamPair& c);

/// Independent check of one line decision: expands P_W / P_Wa (P_W from element
/// enumeration when `brute_force_w`), restricts to the line and tests for
/// identical vanishing.
bool ratio_vanishes_on_line(const CoxeterType& w, const CoxeterType& wa, const ParamPair& c,
                            const PositiveLine& line, bool brute_force_w);

// ------------------------------------------------------------ closed forms

/// One matching family of the explicit classification.
struct SigmaWitness {
  std::string family;  ///< "1", "2", "2a".."2d" (F4 lines are "1")
  bool is_line = false;
  std::string detail;  ///< parameter values, e.g. "p1=1, p2=1"
};

/// Two-class irreducible types covered by the explicit lists: I2(2m), B_n, F4.
bool has_sigma_closed_form(const CoxeterType& w);
/// All families of the explicit list containing c (empty when c is not in Sigma).
std::vector<SigmaWitness> sigma_member(const CoxeterType& w, const ParamPair& c);

/// Drawable description of Sigma within [lo, hi]^2: line segments and points.
struct SigmaPicture {
  struct Segment {
    ParamPair from;
    ParamPair to;
    std::string family;
  };
  struct Point {
    ParamPair at;
    std::string family;
  };
  std::vector<Segment> segments;
  std::vector<Point> points;
};
SigmaPicture sigma_picture(const CoxeterType& w, const Rational& lo, const Rational& hi);

}  // namespace coxsupport
