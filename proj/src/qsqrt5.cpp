#include "coxsupport/qsqrt5.hpp"

#include "coxsupport/cyclotomic.hpp"

#include <cmath>
#include <stdexcept>

namespace coxsupport {

int QSqrt5::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with 5 b^2.
  int c = cmp(a_ * a_, 5 * b_ * b_);
  return c > 0 ? sa : sb;
}

QSqrt5 QSqrt5::inverse() const {
  Rational n = norm();
  if (n == 0) throw std::domain_error("inverse of zero in Q(sqrt 5)");
  return {a_ / n, -b_ / n};
}

double QSqrt5::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(5.0); }

CycloNum QSqrt5::to_cyclo() const {
  CycloNum root5 = CycloNum::from_powers(5, {0, 1, -1, -1, 1});
  return CycloNum(a_) + CycloNum(b_) * root5;
}

std::string QSqrt5::to_string() const {
  if (b_ == 0) return format_rational(a_);
  return format_rational(a_) + "+" + format_rational(b_) + "*sqrt5";
}

}  // namespace coxsupport
