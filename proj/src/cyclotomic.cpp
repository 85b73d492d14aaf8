#include "coxsupport/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxsupport {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by b over Q; b must be nonzero after trimming.
std::pair<QPoly, QPoly> divmod(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly q(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (a[i] == 0) continue;
    Rational f = a[i] / lead;
    std::size_t shift = i + 1 - b.size();
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Reduces an arbitrary polynomial in zeta_n (any degree) to the canonical form.
std::vector<Rational> reduce(long n, const QPoly& p) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  QPoly folded(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] != 0) folded[k % static_cast<std::size_t>(n)] += p[k];
  }
  // Monic division by Phi_n.
  for (std::size_t i = folded.size(); i-- > deg;) {
    if (folded[i] == 0) continue;
    Rational f = folded[i];
    std::size_t shift = i - deg;
    for (std::size_t j = 0; j <= deg; ++j) {
      if (phi[j] != 0) folded[shift + j] -= f * Rational(phi[j]);
    }
  }
  folded.resize(deg);
  return folded;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

const std::vector<BigInt>& cyclotomic_polynomial(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic polynomial index must be positive");
  static std::map<long, std::vector<BigInt>> cache;
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  QPoly num(static_cast<std::size_t>(n) + 1);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& phi_d = cyclotomic_polynomial(d);
    QPoly den(phi_d.begin(), phi_d.end());
    num = divmod(num, den).first;
  }
  std::vector<BigInt> coeffs;
  coeffs.reserve(num.size());
  for (const auto& c : num) coeffs.push_back(c.get_num());
  std::lock_guard lock(cache_mutex());
  return cache.emplace(n, std::move(coeffs)).first->second;
}

CycloNum CycloNum::from_powers(long n, const std::vector<Rational>& coeffs) {
  if (n < 1) throw std::invalid_argument("conductor must be positive");
  return CycloNum(n, reduce(n, coeffs));
}

CycloNum CycloNum::zeta(long n, long k) {
  if (n < 1) throw std::invalid_argument("conductor must be positive");
  long e = ((k % n) + n) % n;
  QPoly p(static_cast<std::size_t>(e) + 1);
  p[static_cast<std::size_t>(e)] = 1;
  return from_powers(n, p);
}

CycloNum CycloNum::root_of_unity(const Rational& t) {
  long n = denominator_of(t);
  BigInt k = t.get_num() % BigInt(n);
  return zeta(n, to_long(k));
}

CycloNum CycloNum::lift(long m) const {
  if (m % conductor_ != 0) throw std::invalid_argument("lift target must be a multiple of the conductor");
  if (m == conductor_) return *this;
  long step = m / conductor_;
  QPoly p(static_cast<std::size_t>(step) * coeffs_.size() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) p[k * static_cast<std::size_t>(step)] = coeffs_[k];
  return from_powers(m, p);
}

bool CycloNum::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

Rational CycloNum::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number is not rational: " + to_string());
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

CycloNum operator+(const CycloNum& x, const CycloNum& y) {
  if (x.conductor_ != y.conductor_) {
    long m = lcm_long(x.conductor_, y.conductor_);
    return x.lift(m) + y.lift(m);
  }
  std::vector<Rational> r = x.coeffs_;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += y.coeffs_[k];
  return CycloNum(x.conductor_, std::move(r));
}

CycloNum operator-(const CycloNum& x, const CycloNum& y) { return x + (-y); }

CycloNum CycloNum::operator-() const {
  std::vector<Rational> r = coeffs_;
  for (auto& c : r) c = -c;
  return CycloNum(conductor_, std::move(r));
}

CycloNum operator*(const CycloNum& x, const CycloNum& y) {
  if (y.conductor_ == 1 || x.conductor_ == 1) {
    const CycloNum& scalar = x.conductor_ == 1 ? x : y;
    const CycloNum& other = x.conductor_ == 1 ? y : x;
    std::vector<Rational> r = other.coeffs_;
    for (auto& c : r) c *= scalar.coeffs_[0];
    return CycloNum(other.conductor_, std::move(r));
  }
  if (x.conductor_ != y.conductor_) {
    long m = lcm_long(x.conductor_, y.conductor_);
    return x.lift(m) * y.lift(m);
  }
  return CycloNum(x.conductor_, reduce(x.conductor_, mul(x.coeffs_, y.coeffs_)));
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
  if (conductor_ == 1) return CycloNum(Rational(1) / coeffs_[0]);
  // Extended Euclid: find s with s*a = 1 mod Phi_N.
  const auto& phi = cyclotomic_polynomial(conductor_);
  QPoly r0(phi.begin(), phi.end());
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0;
  QPoly s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant since Phi_N is irreducible.
  Rational c = r1.at(0);
  for (auto& v : s1) v /= c;
  return from_powers(conductor_, s1);
}

CycloNum CycloNum::conj() const {
  QPoly p(static_cast<std::size_t>(conductor_));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    std::size_t e = (static_cast<std::size_t>(conductor_) - k) % static_cast<std::size_t>(conductor_);
    p[e] += coeffs_[k];
  }
  return from_powers(conductor_, p);
}

CycloNum CycloNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNum result(1);
  CycloNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::complex<double> CycloNum::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(conductor_);
    z += coeffs_[k].get_d() * std::polar(1.0, angle);
  }
  return z;
}

std::string CycloNum::to_string() const {
  if (is_rational()) return format_rational(rational_value());
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << format_rational(coeffs_[k]) << ")";
    if (k > 0) os << "*z" << conductor_ << "^" << k;
  }
  return os.str();
}

bool operator==(const CycloNum& x, const CycloNum& y) {
  if (x.conductor_ != y.conductor_) {
    long m = lcm_long(x.conductor_, y.conductor_);
    return x.lift(m).coeffs_ == y.lift(m).coeffs_;
  }
  return x.coeffs_ == y.coeffs_;
}

std::strong_ordering operator<=>(const CycloNum& x, const CycloNum& y) {
  if (x.conductor_ != y.conductor_) {
    long m = lcm_long(x.conductor_, y.conductor_);
    return x.lift(m) <=> y.lift(m);
  }
  for (std::size_t k = 0; k < x.coeffs_.size(); ++k) {
    int c = cmp(x.coeffs_[k], y.coeffs_[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace coxsupport
