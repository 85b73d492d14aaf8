#include <doctest.h>

#include "coxsupport/poincare.hpp"

#include <numeric>

using namespace coxsupport;

namespace {

UniPoly from_coeffs(std::initializer_list<long> c) {
  UniPoly p;
  int k = 0;
  for (long x : c) p.add_term(k++, BigInt(x));
  return p;
}

BiLaurent geometric(int u, int v, int n) {
  BiLaurent s;
  for (int k = 0; k < n; ++k) s.add_term({u * k, v * k}, 1);
  return s;
}

BiLaurent one_plus(int u, int v) { return BiLaurent::constant(1) + BiLaurent::monomial({u, v}); }

// Explicit products for the two-variable polynomials, with the B_n index range
// running over j = 0..n-1 in both products.
BiLaurent explicit_dihedral(int m) { return one_plus(1, 0) * one_plus(0, 1) * geometric(1, 1, m); }

BiLaurent explicit_b(int n) {
  BiLaurent p = BiLaurent::constant(1);
  for (int j = 0; j < n; ++j) p *= geometric(1, 0, j + 1) * one_plus(j, 1);
  return p;
}

BiLaurent explicit_f4() {
  return one_plus(1, 0) * geometric(1, 0, 3) * one_plus(0, 1) * geometric(0, 1, 3) * one_plus(2, 1) * one_plus(1, 2) *
         one_plus(1, 1) * one_plus(2, 2) * one_plus(3, 3);
}

UniPoly diagonal(const BiLaurent& p) {
  UniPoly u;
  for (const auto& [e, c] : p.terms()) u.add_term(e[0] + e[1], c);
  return u;
}

}  // namespace

TEST_CASE("one-variable Poincare polynomials") {
  CHECK(poincare1(CoxeterType::parse("A1")) == from_coeffs({1, 1}));
  CHECK(poincare1(CoxeterType::parse("B2")) == from_coeffs({1, 1}) * from_coeffs({1, 1}) * from_coeffs({1, 0, 1}));
  CHECK(poincare1(CoxeterType::parse("A2")) == from_coeffs({1, 2, 2, 1}));
  for (const char* t : {"A3", "B4", "D5", "E6", "E7", "E8", "F4", "H3", "H4", "I2:9", "A2xB3"}) {
    auto w = CoxeterType::parse(t);
    CHECK_MESSAGE(poincare1(w).coefficient_sum() == w.order(), t);
  }
}

TEST_CASE("brute force one-variable polynomials match the degree product") {
  std::vector<std::string> types{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "H3", "F4"};
  for (int p = 3; p <= 12; ++p) types.push_back("I2:" + std::to_string(p));
  for (const auto& t : types) {
    CHECK_MESSAGE(poincare_bruteforce1(CoxeterLabel::parse(t)) == poincare1(CoxeterType::parse(t)), t);
  }
}

TEST_CASE("two-variable closed forms") {
  CHECK(poincare2(CoxeterType::parse("I2:4")).expand() == one_plus(1, 0) * one_plus(0, 1) * one_plus(1, 1));
  CHECK(poincare2(CoxeterType::parse("B2")).expand() == poincare2(CoxeterType::parse("I2:4")).expand());
  CHECK(poincare2(CoxeterType::parse("F4")).expand().coefficient_sum() == 1152);
  CHECK(poincare2(CoxeterType::parse("G2")).expand() == explicit_dihedral(3));
  for (int n = 2; n <= 6; ++n) CHECK(poincare2(CoxeterType::single(CoxeterLabel::B(n))).expand() == explicit_b(n));
  CHECK(poincare2(CoxeterType::parse("F4")).expand() == explicit_f4());
  for (int m = 2; m <= 8; ++m) {
    CHECK(poincare2(CoxeterType::single(CoxeterLabel::I2(2 * m))).expand() == explicit_dihedral(m));
  }
  CHECK_THROWS_AS(poincare2(CoxeterType::parse("A3")), std::invalid_argument);
}

TEST_CASE("the printed B_n range loses half the group") {
  // Starting the q2 product at j = 1 gives mass |B_n| / 2.
  for (int n = 2; n <= 5; ++n) {
    BiLaurent p = BiLaurent::constant(1);
    for (int j = 0; j < n; ++j) p *= geometric(1, 0, j + 1);
    for (int j = 1; j < n; ++j) p *= one_plus(j, 1);
    CHECK(2 * p.coefficient_sum() == CoxeterLabel::B(n).order());
  }
}

TEST_CASE("brute force two-variable polynomials match the factored forms") {
  for (const char* t : {"I2:4", "I2:6", "I2:8", "I2:10", "I2:12", "B2", "B3", "B4", "F4"}) {
    auto l = CoxeterLabel::parse(t);
    CHECK_MESSAGE(poincare_bruteforce2(l) == poincare2(CoxeterType::single(l)).expand(), t);
  }
}

TEST_CASE("specializing q1 = q2 recovers the one-variable polynomial") {
  for (const char* t : {"I2:4", "I2:6", "I2:10", "B2", "B3", "B4", "F4"}) {
    auto w = CoxeterType::parse(t);
    CHECK_MESSAGE(diagonal(poincare2(w).expand()) == poincare1(w), t);
  }
}

TEST_CASE("labeled sub-types use one variable per class") {
  for (const auto& pc : standard_parabolics(CoxeterType::parse("F4"))) {
    BiLaurent p = poincare2(pc.type).expand();
    CHECK(p.coefficient_sum() == pc.type.order());
    CHECK(diagonal(p) == poincare1(pc.type));
  }
  auto b3 = CoxeterType::parse("B3");
  for (const auto& pc : standard_parabolics(b3)) {
    if (pc.type.name() == "A1(c2)") {
      CHECK(poincare2(pc.type).expand() == one_plus(0, 1));
    }
  }
}

TEST_CASE("a-counts") {
  CHECK(a_count(CoxeterType::parse("H4"), 5) == 2);
  CHECK(a_count(CoxeterType::parse("E7"), 1) == 7);
  CHECK(a_count(CoxeterType::parse("B2"), 2) == 2);
  CHECK_THROWS(a_count(CoxeterType::parse("B2"), 0));
}

TEST_CASE("Poincare ratios") {
  auto b2 = CoxeterType::parse("B2");
  auto r = poincare_ratio(b2, CoxeterType::parse("A1xA1"));
  CHECK(r.exact);
  CHECK(r.quotient == from_coeffs({1, 0, 1}));
  CHECK(poincare_ratio(b2, b2).quotient == UniPoly::constant(1));
  CHECK(poincare_ratio(b2, CoxeterType::parse("A1")).quotient == from_coeffs({1, 1}) * from_coeffs({1, 0, 1}));
  CHECK_FALSE(poincare_ratio(CoxeterType::parse("A2"), CoxeterType::parse("A1xA1")).exact);
}

TEST_CASE("ratio nonvanishing at roots of unity matches a-count equality") {
  for (const char* t : {"A4", "B4", "D5", "E6", "F4", "H3", "H4", "I2:12", "I2:7"}) {
    auto w = CoxeterType::parse(t);
    for (const auto& pc : standard_parabolics(w)) {
      auto r = poincare_ratio(w, pc.type);
      REQUIRE(r.exact);
      // At q = 1 the ratio is the index, so the comparison starts at m = 2.
      for (int m = 2; m <= 30; ++m) {
        for (int p = 1; p < m; ++p) {
          if (std::gcd(p, m) != 1) continue;
          bool nonzero = !cyclo_eval_root(r.quotient, make_rational(p, m)).is_zero();
          CHECK(nonzero == (a_count(w, m) == a_count(pc.type, m)));
        }
      }
    }
  }
}
