#include "coxsupport/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxsupport {

UniPoly q_integer(int n) {
  UniPoly p;
  for (int k = 0; k < n; ++k) p.add_term(k, 1);
  return p;
}

BiLaurent binomial(int u, int v) {
  BiLaurent p = BiLaurent::constant(1);
  p.add_term({u, v}, -1);
  return p;
}

int degree(const UniPoly& p) {
  if (p.is_zero()) return -1;
  return p.terms().rbegin()->first;
}

namespace {

void append_term(std::ostringstream& os, bool first, const BigInt& c, const std::string& mono) {
  BigInt mag = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (mono.empty()) {
    os << mag;
  } else {
    if (mag != 1) os << mag;
    os << mono;
  }
}

std::string power(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    append_term(os, first, c, power(var, e));
    first = false;
  }
  return os.str();
}

std::string to_string(const BiLaurent& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string mono = power("q1", e[0]);
    std::string m2 = power("q2", e[1]);
    if (!m2.empty()) mono = mono.empty() ? m2 : mono + "*" + m2;
    append_term(os, first, c, mono);
    first = false;
  }
  return os.str();
}

DivisionResult poly_div_exact(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if ((!a.is_zero() && a.terms().begin()->first < 0) || b.terms().begin()->first < 0) {
    throw std::invalid_argument("poly_div_exact expects nonnegative exponents");
  }
  DivisionResult result;
  UniPoly rem = a;
  const int db = degree(b);
  const BigInt& lead = b.terms().rbegin()->second;
  while (!rem.is_zero() && degree(rem) >= db) {
    const int dr = degree(rem);
    const BigInt& top = rem.terms().rbegin()->second;
    if (top % lead != 0) break;
    BigInt f = top / lead;
    UniPoly term = UniPoly::monomial(dr - db, f);
    result.quotient += term;
    rem = rem - term * b;
  }
  result.exact = rem.is_zero();
  result.remainder = std::move(rem);
  return result;
}

std::optional<BiLaurent> divide_by_binomial(const BiLaurent& a, int u, int v) {
  if (u < 0 || v < 0 || (u == 0 && v == 0)) {
    throw std::invalid_argument("binomial exponents must be nonnegative and not both zero");
  }
  auto weight = [&](const std::array<int, 2>& e) { return static_cast<long>(u) * e[0] + static_cast<long>(v) * e[1]; };
  if (a.is_zero()) return BiLaurent{};
  long max_weight = weight(a.terms().begin()->first);
  for (const auto& [e, c] : a.terms()) max_weight = std::max(max_weight, weight(e));
  const long step = weight({u, v});
  BiLaurent quotient;
  BiLaurent rem = a;
  while (!rem.is_zero()) {
    auto lowest = rem.terms().begin();
    for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it) {
      if (weight(it->first) < weight(lowest->first)) lowest = it;
    }
    auto e = lowest->first;
    BigInt c = lowest->second;
    if (weight(e) + step > max_weight) return std::nullopt;
    quotient.add_term(e, c);
    rem.add_term(e, -c);
    rem.add_term({e[0] + u, e[1] + v}, c);
  }
  return quotient;
}

CycloNum cyclo_eval(const UniPoly& p, const CycloNum& q) {
  CycloNum sum(0);
  for (const auto& [e, c] : p.terms()) sum += CycloNum(Rational(c)) * q.pow(e);
  return sum;
}

CycloNum cyclo_eval(const BiLaurent& p, const CycloNum& q1, const CycloNum& q2) {
  CycloNum sum(0);
  for (const auto& [e, c] : p.terms()) sum += CycloNum(Rational(c)) * q1.pow(e[0]) * q2.pow(e[1]);
  return sum;
}

namespace {

// Exponent k with exp(2 pi i x) = zeta_n^k; requires n * x integral.
std::size_t zeta_slot(const Rational& x, long n) {
  Rational k = frac_of(x) * n;
  return static_cast<std::size_t>(to_long(k.get_num()));
}

}  // namespace

CycloNum cyclo_eval_root(const UniPoly& p, const Rational& t) {
  const long n = denominator_of(t);
  std::vector<Rational> b(static_cast<std::size_t>(n));
  for (const auto& [e, c] : p.terms()) {
    b[zeta_slot(e * t, n)] += Rational(c);
  }
  return CycloNum::from_powers(n, b);
}

CycloNum cyclo_eval_root(const BiLaurent& p, const Rational& t1, const Rational& t2) {
  const long n = lcm_long(denominator_of(t1), denominator_of(t2));
  std::vector<Rational> b(static_cast<std::size_t>(n));
  for (const auto& [e, c] : p.terms()) {
    b[zeta_slot(e[0] * t1 + e[1] * t2, n)] += Rational(c);
  }
  return CycloNum::from_powers(n, b);
}

void PositiveLine::validate() const {
  if (a1 < 0 || a2 < 0 || (a1 == 0 && a2 == 0)) {
    throw std::invalid_argument("positive line needs a1, a2 >= 0, not both zero");
  }
  if (std::gcd(a1, a2) != 1) throw std::invalid_argument("positive line needs gcd(a1, a2) = 1");
  if (b <= 0) throw std::invalid_argument("positive line needs b > 0");
}

std::string PositiveLine::to_string() const {
  std::ostringstream os;
  os << a1 << "*c1 + " << a2 << "*c2 = " << format_rational(b);
  return os.str();
}

LineRestriction restrict_to_line(const BiLaurent& q, const Rational& c1, const Rational& c2,
                                 const PositiveLine& line) {
  line.validate();
  if (!line.contains(c1, c2)) {
    throw std::invalid_argument("point (" + format_rational(c1) + ", " + format_rational(c2) +
                                ") is not on the line " + line.to_string());
  }
  // zeta1^i zeta2^j = exp(2 pi i (i c1 + j c2)); coefficients are gathered per
  // power of zeta_N before a single reduction.
  const long n = lcm_long(denominator_of(c1), denominator_of(c2));
  std::map<int, std::vector<Rational>> buckets;
  for (const auto& [e, c] : q.terms()) {
    int u_exp = static_cast<int>(e[0] * line.a2 - e[1] * line.a1);
    auto& b = buckets[u_exp];
    b.resize(static_cast<std::size_t>(n));
    b[zeta_slot(e[0] * c1 + e[1] * c2, n)] += Rational(c);
  }
  LineRestriction out;
  for (auto& [u, b] : buckets) {
    CycloNum v = CycloNum::from_powers(n, b);
    if (!v.is_zero()) out.terms.emplace(u, std::move(v));
  }
  return out;
}

}  // namespace coxsupport
