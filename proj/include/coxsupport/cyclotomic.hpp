#pragma once

#include "coxsupport/rational.hpp"

#include <complex>
#include <compare>
#include <string>
#include <vector>

namespace coxsupport {

/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
const std::vector<BigInt>& cyclotomic_polynomial(long n);

long euler_phi(long n);
long lcm_long(long a, long b);

/// Element of the cyclotomic field Q(zeta_N), stored as a polynomial in zeta_N
/// reduced modulo Phi_N, so the representation at a fixed conductor is canonical
/// and the zero test is exact. Mixed-conductor arithmetic lifts both operands to
/// the lcm of the conductors.
class CycloNum {
 public:
  CycloNum() : conductor_(1), coeffs_(1) {}
  CycloNum(Rational q) : conductor_(1), coeffs_{std::move(q)} {}  // NOLINT
  CycloNum(long q) : conductor_(1), coeffs_{Rational(q)} {}       // NOLINT
  CycloNum(int q) : CycloNum(static_cast<long>(q)) {}             // NOLINT

  /// zeta_N^k with zeta_N = exp(2 pi i / N).
  static CycloNum zeta(long n, long k = 1);
  /// exp(2 pi i t) for rational t; the conductor is the denominator of t.
  static CycloNum root_of_unity(const Rational& t);
  /// Builds sum_k coeffs[k] * zeta_N^k for any length of coeffs, reducing mod Phi_N.
  static CycloNum from_powers(long n, const std::vector<Rational>& coeffs);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Same value expressed over Q(zeta_M); requires conductor() | M.
  CycloNum lift(long m) const;

  bool is_zero() const;
  bool is_rational() const;
  /// Value as a rational; throws std::domain_error if not rational.
  Rational rational_value() const;

  CycloNum inverse() const;
  /// Complex conjugation zeta -> zeta^{-1}.
  CycloNum conj() const;
  CycloNum pow(long e) const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend CycloNum operator+(const CycloNum& x, const CycloNum& y);
  friend CycloNum operator-(const CycloNum& x, const CycloNum& y);
  friend CycloNum operator*(const CycloNum& x, const CycloNum& y);
  friend CycloNum operator/(const CycloNum& x, const CycloNum& y) { return x * y.inverse(); }
  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
  CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
  CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

  friend bool operator==(const CycloNum& x, const CycloNum& y);
  /// Storage order after lifting to a common conductor; used for map keys only.
  friend std::strong_ordering operator<=>(const CycloNum& x, const CycloNum& y);

 private:
  CycloNum(long n, std::vector<Rational> coeffs) : conductor_(n), coeffs_(std::move(coeffs)) {}

  long conductor_;
  std::vector<Rational> coeffs_;
};

}  // namespace coxsupport
