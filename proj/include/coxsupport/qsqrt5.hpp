#pragma once

#include "coxsupport/rational.hpp"

#include <compare>
#include <string>

namespace coxsupport {

class CycloNum;

/// Element a + b*sqrt(5) of the real quadratic field Q(sqrt 5).
/// Used for the exact coordinates of the H3 and H4 root systems.
class QSqrt5 {
 public:
  QSqrt5() = default;
  QSqrt5(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT
  QSqrt5(long a) : a_(a), b_(0) {}                                          // NOLINT

  /// The golden ratio (1 + sqrt 5) / 2.
  static QSqrt5 golden() { return {Rational(1, 2), Rational(1, 2)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  QSqrt5 conjugate() const { return {a_, -b_}; }
  Rational norm() const { return a_ * a_ - 5 * b_ * b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  /// Exact sign of the real number a + b*sqrt 5.
  int sign() const;
  QSqrt5 inverse() const;
  double to_double() const;
  /// Embedding into Q(zeta_5) via the Gauss sum sqrt 5 = z - z^2 - z^3 + z^4.
  CycloNum to_cyclo() const;
  std::string to_string() const;

  friend QSqrt5 operator+(const QSqrt5& x, const QSqrt5& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QSqrt5 operator-(const QSqrt5& x, const QSqrt5& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend QSqrt5 operator*(const QSqrt5& x, const QSqrt5& y) {
    return {x.a_ * y.a_ + 5 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend QSqrt5 operator/(const QSqrt5& x, const QSqrt5& y) { return x * y.inverse(); }
  QSqrt5 operator-() const { return {-a_, -b_}; }
  QSqrt5& operator+=(const QSqrt5& o) { return *this = *this + o; }
  QSqrt5& operator-=(const QSqrt5& o) { return *this = *this - o; }
  QSqrt5& operator*=(const QSqrt5& o) { return *this = *this * o; }

  friend bool operator==(const QSqrt5& x, const QSqrt5& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  /// Lexicographic on (a, b); a storage order, not the order of the reals.
  friend std::strong_ordering operator<=>(const QSqrt5& x, const QSqrt5& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (x.b_ != y.b_) return x.b_ < y.b_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational a_;
  Rational b_;
};

}  // namespace coxsupport
