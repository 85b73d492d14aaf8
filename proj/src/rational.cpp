#include "coxsupport/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace coxsupport {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!is_digits(num) || !is_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "': expected p or p/q with integer p, q");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "': zero denominator");
  }
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long to_long(const BigInt& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in a machine word");
  return z.get_si();
}

long denominator_of(const Rational& q) { return to_long(q.get_den()); }

BigInt floor_of(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational frac_of(const Rational& q) { return q - Rational(floor_of(q)); }

}  // namespace coxsupport
