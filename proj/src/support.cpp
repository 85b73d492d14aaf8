#include "coxsupport/support.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxsupport {

// ------------------------------------------------------------ equal parameters

bool in_support_equal(const CoxeterType& w, const CoxeterType& wa, const Rational& c) {
  if (c <= 0 || is_integer(c)) return true;
  const int m = static_cast<int>(denominator_of(c));
  return a_count(w, m) == a_count(wa, m);
}

std::vector<Stratum> support_strata(const CoxeterType& w, const Rational& c) {
  std::vector<Stratum> out;
  for (auto& pc : standard_parabolics(w)) {
    Stratum s;
    s.in_support = in_support_equal(w, pc.type, c);
    s.codimension = pc.rank;
    s.parabolic = std::move(pc);
    out.push_back(std::move(s));
  }
  return out;
}

bool is_finite_dim_equal(const CoxeterType& w, const Rational& c) {
  if (c <= 0 || is_integer(c)) return false;
  const int m = static_cast<int>(denominator_of(c));
  const int aw = a_count(w, m);
  for (const auto& pc : maximal_parabolics(w)) {
    if (aw <= a_count(pc.degrees, m)) return false;
  }
  return true;
}

std::set<int> finite_dim_denominators(const CoxeterType& w, int m_max) {
  std::set<int> out;
  for (int m = 2; m <= m_max; ++m) {
    if (is_finite_dim_equal(w, Rational(1, m))) out.insert(m);
  }
  return out;
}

bool is_closure_stable(const std::vector<Stratum>& strata) {
  std::map<std::uint32_t, bool> in;
  for (const auto& s : strata) {
    for (auto mask : s.parabolic.masks) in[mask] = s.in_support;
  }
  for (const auto& [big, big_in] : in) {
    if (big_in) continue;
    // Every sub-parabolic of an excluded one must be excluded as well.
    for (std::uint32_t sub = big;; sub = (sub - 1) & big) {
      auto it = in.find(sub);
      if (it != in.end() && it->second) return false;
      if (sub == 0) break;
    }
  }
  return true;
}

// ------------------------------------------------------------ two parameters

namespace {

bool parallel(const Binomial& b, const PositiveLine& line) {
  return static_cast<long>(b[0]) * line.a2 == static_cast<long>(b[1]) * line.a1;
}

int order_side(const std::map<Binomial, int>& side, const ParamPair& c, const PositiveLine& line) {
  int n = 0;
  for (const auto& [b, k] : side) {
    if (!parallel(b, line)) continue;
    Rational v = b[0] * c.first + b[1] * c.second;
    if (is_integer(v)) n += k;
  }
  return n;
}

void require_two_class(const CoxeterType& w) {
  if (!w.two_class()) {
    throw std::invalid_argument(w.name() +
                                " is not an irreducible group with two reflection classes (I2(2m), B_n, F4, G2)");
  }
}

CoxeterType labeled_copy(CoxeterType w) {
  w.labeled = true;
  return w;
}

}  // namespace

int vanish_order_on_line(const FactoredBiPoincare& f, const ParamPair& c, const PositiveLine& line) {
  line.validate();
  if (!line.contains(c.first, c.second)) throw std::invalid_argument("point is not on " + line.to_string());
  return order_side(f.numerator, c, line) - order_side(f.denominator, c, line);
}

std::vector<PositiveLine> candidate_lines(const FactoredBiPoincare& fw, const FactoredBiPoincare& fa,
                                          const ParamPair& c) {
  std::set<std::pair<long, long>> dirs;
  for (const auto* side : {&fw.numerator, &fw.denominator, &fa.numerator, &fa.denominator}) {
    for (const auto& [b, k] : *side) {
      long g = std::gcd(b[0], b[1]);
      dirs.emplace(b[0] / g, b[1] / g);
    }
  }
  std::vector<PositiveLine> out;
  for (auto [a1, a2] : dirs) {
    Rational b = a1 * c.first + a2 * c.second;
    if (b > 0) out.push_back(PositiveLine{a1, a2, b});
  }
  return out;
}

LineVerdict in_support_two(const CoxeterType& w, const CoxeterType& wa, const ParamPair& c) {
  require_two_class(w);
  auto fw = poincare2(labeled_copy(w));
  auto fa = poincare2(labeled_copy(wa));
  LineVerdict v;
  for (const auto& line : candidate_lines(fw, fa, c)) {
    if (vanish_order_on_line(fw, c, line) - vanish_order_on_line(fa, c, line) > 0) {
      v.in_support = false;
      v.line = line;
      break;
    }
  }
  return v;
}

std::vector<Stratum> support_strata_two(const CoxeterType& w, const ParamPair& c) {
  require_two_class(w);
  std::vector<Stratum> out;
  for (auto& pc : standard_parabolics(labeled_copy(w))) {
    Stratum s;
    s.in_support = in_support_two(w, pc.type, c).in_support;
    s.codimension = pc.rank;
    s.parabolic = std::move(pc);
    out.push_back(std::move(s));
  }
  return out;
}

bool is_finite_dim_two(const CoxeterType& w, const ParamPair& c) {
  require_two_class(w);
  for (const auto& pc : maximal_parabolics(labeled_copy(w))) {
    if (in_support_two(w, pc.type, c).in_support) return false;
  }
  return true;
}

bool ratio_vanishes_on_line(const CoxeterType& w, const CoxeterType& wa, const ParamPair& c,
                            const PositiveLine& line, bool brute_force_w) {
  require_two_class(w);
  BiLaurent p = brute_force_w ? poincare_bruteforce2(w.factors[0].label) : poincare2(labeled_copy(w)).expand();
  if (brute_force_w && w.factors[0].swapped()) {
    BiLaurent s;
    for (const auto& [e, k] : p.terms()) s.add_term({e[1], e[0]}, k);
    p = s;
  }
  auto fa = poincare2(labeled_copy(wa));
  for (auto [b, k] : fa.denominator) {
    for (int i = 0; i < k; ++i) p *= binomial(b[0], b[1]);
  }
  for (auto [b, k] : fa.numerator) {
    for (int i = 0; i < k; ++i) {
      auto q = divide_by_binomial(p, b[0], b[1]);
      if (!q) throw std::invalid_argument(wa.name() + " does not divide the Poincare polynomial of " + w.name());
      p = std::move(*q);
    }
  }
  return restrict_to_line(p, c.first, c.second, line).is_identically_zero();
}

// ------------------------------------------------------------ closed forms

namespace {

bool positive_integer(const Rational& x) { return x > 0 && is_integer(x); }
bool odd_positive(const Rational& x) { return positive_integer(x) && x.get_num() % 2 != 0; }
bool not_divisible(const Rational& x, long n) { return x.get_num() % n != 0; }

std::string fmt(const char* name, const Rational& x) { return std::string(name) + "=" + format_rational(x); }

enum class SigmaKind { Dihedral, B, F4 };

struct SigmaShape {
  SigmaKind kind;
  long n;  ///< m for I2(2m), n for B_n
  bool swap;
};

SigmaShape shape_of(const CoxeterType& w) {
  if (!has_sigma_closed_form(w)) {
    throw std::invalid_argument(w.name() + " has no explicit classification (I2(2m), B_n, F4 only)");
  }
  const Factor& f = w.factors[0];
  switch (f.label.family) {
    case Family::I: return {SigmaKind::Dihedral, f.label.p / 2, f.swapped()};
    case Family::B: return {SigmaKind::B, f.label.rank, f.swapped()};
    default: return {SigmaKind::F4, 4, f.swapped()};
  }
}

}  // namespace

bool has_sigma_closed_form(const CoxeterType& w) { return w.two_class(); }

std::vector<SigmaWitness> sigma_member(const CoxeterType& w, const ParamPair& c_in) {
  const SigmaShape sh = shape_of(w);
  const Rational c1 = sh.swap ? c_in.second : c_in.first;
  const Rational c2 = sh.swap ? c_in.first : c_in.second;
  std::vector<SigmaWitness> out;
  const Rational sum = c1 + c2;

  if (sh.kind == SigmaKind::Dihedral) {
    Rational r = sh.n * sum;
    if (positive_integer(r) && not_divisible(r, sh.n)) out.push_back({"1", true, fmt("r", r)});
    Rational p1 = 2 * c1, p2 = 2 * c2;
    if (odd_positive(p1) && odd_positive(p2)) out.push_back({"2", false, fmt("p1", p1) + ", " + fmt("p2", p2)});
    return out;
  }

  if (sh.kind == SigmaKind::B) {
    const long n = sh.n;
    Rational p = 2 * ((n - 1) * c1 + c2);
    if (odd_positive(p)) out.push_back({"1", true, fmt("p", p)});
    Rational r = n * c1;
    if (positive_integer(r) && not_divisible(r, n)) {
      long rr = to_long(r.get_num());
      long smax = n / std::gcd(rr, n);
      for (long s = 2; s <= smax; ++s) {
        Rational ps = 2 * (c2 + r - r * s / n);
        if (odd_positive(ps)) {
          out.push_back({"2", false, fmt("r", r) + ", " + fmt("p", ps) + ", s=" + std::to_string(s)});
        }
      }
    }
    return out;
  }

  // F4
  Rational p4 = 4 * sum, p6 = 6 * sum;
  if (odd_positive(p4)) out.push_back({"1", true, "c1+c2=" + fmt("p", p4) + "/4"});
  if (odd_positive(p6)) out.push_back({"1", true, "c1+c2=" + fmt("p", p6) + "/6"});
  {
    Rational p1 = 2 * c1, p2 = 2 * c2;
    if (odd_positive(p1) && odd_positive(p2)) out.push_back({"2a", false, fmt("p1", p1) + ", " + fmt("p2", p2)});
  }
  {
    Rational p1 = 3 * c1, p2 = 3 * c2;
    if (positive_integer(p1) && positive_integer(p2) && not_divisible(p1, 3) && not_divisible(p2, 3)) {
      out.push_back({"2b", false, fmt("p1", p1) + ", " + fmt("p2", p2)});
    }
  }
  for (int order = 0; order < 2; ++order) {
    const Rational& x = order == 0 ? c1 : c2;  // the p1/3 coordinate
    const Rational& y = order == 0 ? c2 : c1;
    Rational p1 = 3 * x, p2 = 4 * y + 2 * x;
    if (positive_integer(p1) && not_divisible(p1, 3) && odd_positive(p2)) {
      out.push_back({"2c", false, fmt("p1", p1) + ", " + fmt("p2", p2) + (order ? " (swapped)" : "")});
    }
  }
  {
    Rational p1 = 2 * c1 + 4 * c2, p2 = 4 * c1 + 2 * c2;
    if (odd_positive(p1) && odd_positive(p2) && not_divisible(p1 + p2, 3)) {
      out.push_back({"2d", false, fmt("p1", p1) + ", " + fmt("p2", p2)});
    }
  }
  return out;
}

// ------------------------------------------------------------ picture

namespace {

// Clips a1 x + a2 y = b to the square [lo, hi]^2.
std::optional<std::pair<ParamPair, ParamPair>> clip(long a1, long a2, const Rational& b, const Rational& lo,
                                                   const Rational& hi) {
  std::vector<ParamPair> pts;
  auto inside = [&](const Rational& v) { return v >= lo && v <= hi; };
  if (a2 != 0) {
    for (const Rational& x : {lo, hi}) {
      Rational y = (b - a1 * x) / a2;
      if (inside(y)) pts.emplace_back(x, y);
    }
  }
  if (a1 != 0) {
    for (const Rational& y : {lo, hi}) {
      Rational x = (b - a2 * y) / a1;
      if (inside(x)) pts.emplace_back(x, y);
    }
  }
  if (pts.empty()) return std::nullopt;
  auto [mn, mx] = std::minmax_element(pts.begin(), pts.end());
  return std::make_pair(*mn, *mx);
}

}  // namespace

SigmaPicture sigma_picture(const CoxeterType& w, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("plot range needs lo < hi");
  if (hi - lo > 24) throw std::invalid_argument("plot range wider than 24 is not drawn");
  const SigmaShape sh = shape_of(w);
  SigmaPicture pic;
  const long bound = to_long(floor_of(hi > 0 ? hi : Rational(0))) + 1;
  auto add_line = [&](long a1, long a2, const Rational& b, const std::string& fam) {
    if (sh.swap) std::swap(a1, a2);
    if (auto seg = clip(a1, a2, b, lo, hi)) pic.segments.push_back({seg->first, seg->second, fam});
  };
  auto add_point = [&](Rational x, Rational y, const std::string& fam) {
    if (sh.swap) std::swap(x, y);
    if (x >= lo && x <= hi && y >= lo && y <= hi) pic.points.push_back({{x, y}, fam});
  };
  // Parameters are enumerated generously and filtered by the box.
  const long top = 12 * (sh.n + 1) * bound + 12;
  if (sh.kind == SigmaKind::Dihedral) {
    for (long r = 1; r <= top; ++r) {
      if (r % sh.n != 0) add_line(1, 1, make_rational(r, sh.n), "1");
    }
    for (long p1 = 1; p1 <= 2 * bound; p1 += 2) {
      for (long p2 = 1; p2 <= 2 * bound; p2 += 2) add_point(make_rational(p1, 2), make_rational(p2, 2), "2");
    }
  } else if (sh.kind == SigmaKind::B) {
    const long n = sh.n;
    for (long p = 1; p <= top; p += 2) add_line(n - 1, 1, make_rational(p, 2), "1");
    for (long r = 1; r <= n * bound; ++r) {
      if (r % n == 0) continue;
      for (long s = 2; s <= n / std::gcd(r, n); ++s) {
        for (long p = 1; p <= top; p += 2) {
          add_point(make_rational(r, n), make_rational(p, 2) - r + make_rational(r * s, n), "2");
        }
      }
    }
  } else {
    for (long p = 1; p <= top; p += 2) {
      add_line(1, 1, make_rational(p, 4), "1");
      add_line(1, 1, make_rational(p, 6), "1");
    }
    const long t = 6 * bound + 6;
    for (long p1 = 1; p1 <= t; ++p1) {
      for (long p2 = 1; p2 <= t; ++p2) {
        if (p1 % 2 && p2 % 2) add_point(make_rational(p1, 2), make_rational(p2, 2), "2a");
        if (p1 % 3 && p2 % 3) add_point(make_rational(p1, 3), make_rational(p2, 3), "2b");
        if (p1 % 3 && p2 % 2) {
          add_point(make_rational(p1, 3), make_rational(p2, 4) - make_rational(p1, 6), "2c");
          add_point(make_rational(p2, 4) - make_rational(p1, 6), make_rational(p1, 3), "2c");
        }
        if (p1 % 2 && p2 % 2 && (p1 + p2) % 3) {
          add_point(make_rational(2 * p2 - p1, 6), make_rational(2 * p1 - p2, 6), "2d");
        }
      }
    }
  }
  return pic;
}

}  // namespace coxsupport
