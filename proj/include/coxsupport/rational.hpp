#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coxsupport {

/// Exact rational number; gmpxx keeps it canonical (reduced, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed input
/// (including decimals, which would not be exact).
Rational parse_rational(std::string_view text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

/// p/q in canonical form (mpq_class(p, q) alone does not reduce).
inline Rational make_rational(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Denominator as a machine integer; throws if it does not fit in a long.
long denominator_of(const Rational& q);

/// Largest integer <= q.
BigInt floor_of(const Rational& q);

/// Fractional part in [0, 1).
Rational frac_of(const Rational& q);

long to_long(const BigInt& z);

}  // namespace coxsupport
