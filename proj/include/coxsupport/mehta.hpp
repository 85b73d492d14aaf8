#pragma once

#include "coxsupport/coxeter.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace coxsupport {

/// Ratio of Gamma-function products, stored as multisets of exact arguments.
struct GammaProduct {
  std::vector<Rational> numerator;
  std::vector<Rational> denominator;

  /// Removes arguments present on both sides and sorts both lists.
  void cancel();
  void multiply_by(const GammaProduct& other);
  /// #numerator args in Z<=0 minus #denominator args in Z<=0 (positive: pole).
  int order() const;
  /// Finite value; throws std::domain_error unless order() == 0 and no argument
  /// on either side is a pole.
  double value() const;
  std::string to_string() const;
  friend bool operator==(const GammaProduct&, const GammaProduct&) = default;
};

/// prod Gamma(1 - d_i c) / Gamma(1 - c), one factor per degree.
GammaProduct mm_value(const CoxeterType& w, const Rational& c);

/// Two-parameter value for I2(2m), B_n, F4 (and their labeled sub-types): the
/// three-factor dihedral form for I2 labels, the root-height product otherwise.
/// Single-class factors contribute mm_value at their class parameter.
GammaProduct mm_value2(const CoxeterType& w, const Rational& c1, const Rational& c2);

/// F_Wa / F_W has neither zero nor pole, decided from integer hits of the
/// exact Gamma arguments.
bool mm_ratio_nonzero(const CoxeterType& w, const CoxeterType& wa, const Rational& c);
bool mm_ratio_nonzero2(const CoxeterType& w, const CoxeterType& wa, const Rational& c1, const Rational& c2);

/// Positive roots of an irreducible group in orthonormal coordinates, each with
/// (alpha, alpha) = 2, and the simple roots as an orthonormal-coordinate matrix.
struct RealFrame {
  int rank = 0;
  std::vector<std::vector<double>> roots;
  std::vector<int> root_class;
  std::vector<std::vector<double>> simple;  ///< simple[i] = alpha_i in orthonormal coordinates (catalog length)
};
RealFrame real_frame(const CoxeterLabel& l);

enum class Quadrature { Adaptive, MonteCarlo };

struct NumericResult {
  double value = 0;
  double error = 0;  ///< quadrature error estimate or Monte Carlo standard error
};

/// (2 pi)^{-r/2} int exp(-|x|^2/2) |Delta_1|^{-2 c1} |Delta_2|^{-2 c2} f(x) dx over
/// the orthonormal coordinates of a rank <= 2 group. Single-class groups use c1.
/// Requires c1, c2 <= 0. Monte Carlo draws `samples` Gaussian points from a
/// fixed seed.
NumericResult weighted_integral(const CoxeterLabel& l, double c1, double c2,
                                const std::function<double(const std::vector<double>&)>& f, Quadrature method,
                                double tol = 1e-10, long samples = 20000000);

/// The Macdonald-Mehta integral itself (f = 1).
NumericResult mm_numeric(const CoxeterLabel& l, double c1, double c2, Quadrature method = Quadrature::Adaptive,
                         double tol = 1e-10);

}  // namespace coxsupport
