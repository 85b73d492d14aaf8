#include <doctest.h>

#include "coxsupport/cyclotomic.hpp"
#include "coxsupport/linalg.hpp"
#include "coxsupport/poly.hpp"
#include "coxsupport/qsqrt5.hpp"

#include <random>

using namespace coxsupport;

namespace {

UniPoly from_coeffs(std::initializer_list<long> c) {
  UniPoly p;
  int k = 0;
  for (long x : c) p.add_term(k++, BigInt(x));
  return p;
}

UniPoly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coef(-5, 5);
  UniPoly p;
  int d = deg(rng);
  for (int k = 0; k <= d; ++k) p.add_term(k, coef(rng));
  if (p.is_zero()) p = UniPoly::constant(1);
  return p;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-1/4") == Rational(-1, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(format_rational(make_rational(-3, 9)) == "-1/3");
  CHECK(frac_of(Rational(-1, 4)) == Rational(3, 4));
  CHECK(floor_of(Rational(-1, 4)) == -1);
}

TEST_CASE("Q(sqrt 5) field axioms on samples") {
  QSqrt5 x(Rational(1, 3), Rational(2)), y(Rational(-2), Rational(1, 5)), z(Rational(7, 2), Rational(-1));
  CHECK((x * y) * z == x * (y * z));
  CHECK(x * (y + z) == x * y + x * z);
  CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
  CHECK(x * x.inverse() == QSqrt5(1));
  QSqrt5 tau = QSqrt5::golden();
  CHECK(tau * tau == tau + QSqrt5(1));
  CHECK(QSqrt5(Rational(-2), Rational(1)).sign() == 1);   // sqrt5 - 2
  CHECK(QSqrt5(Rational(3), Rational(-2)).sign() == -1);  // 3 - 2 sqrt5
  CHECK(QSqrt5(0).sign() == 0);
  auto s = QSqrt5(0, 1).to_cyclo();
  CHECK(s * s == CycloNum(5));
  CHECK(std::abs(x.to_cyclo().to_complex().real() - x.to_double()) < 1e-12);
}

TEST_CASE("cyclo_eval examples") {
  CHECK(cyclo_eval(from_coeffs({1, 1, 1}), CycloNum::zeta(3)).is_zero());
  UniPoly b2 = from_coeffs({1, 1}) * from_coeffs({1, 1}) * from_coeffs({1, 0, 1});
  CHECK(cyclo_eval(b2, CycloNum(-1)).is_zero());
  CycloNum v = cyclo_eval(from_coeffs({1, 1}), CycloNum::zeta(4));
  CHECK_FALSE(v.is_zero());
  CHECK(v.to_complex() == std::complex<double>(1, 1));
}

TEST_CASE("cyclotomic polynomials vanish exactly at primitive roots") {
  for (long n = 1; n <= 24; ++n) {
    UniPoly phi;
    const auto& c = cyclotomic_polynomial(n);
    for (std::size_t k = 0; k < c.size(); ++k) phi.add_term(static_cast<int>(k), c[k]);
    for (long m = 1; m <= 24; ++m) {
      CycloNum v = cyclo_eval(phi, CycloNum::zeta(m));
      CHECK_MESSAGE(v.is_zero() == (m == n), "n=" << n << " m=" << m);
    }
  }
}

TEST_CASE("cyclotomic field arithmetic") {
  CycloNum z = CycloNum::zeta(12);
  CHECK(z.pow(12) == CycloNum(1));
  CHECK(z.pow(6) == CycloNum(-1));
  CHECK((z * z.conj()) == CycloNum(1));
  CycloNum w = CycloNum::zeta(3) + CycloNum::zeta(4);
  CHECK(w * w.inverse() == CycloNum(1));
  CHECK(CycloNum::root_of_unity(Rational(-1, 4)) == CycloNum::zeta(4, 3));
  CHECK((CycloNum::zeta(3) + CycloNum::zeta(3, 2)).rational_value() == -1);
  CHECK(CycloNum::zeta(6).lift(12) == CycloNum::zeta(6));
}

TEST_CASE("poly_div_exact") {
  auto r = poly_div_exact(from_coeffs({1, 0, 0, 0, -1}), from_coeffs({1, -1}));
  CHECK(r.exact);
  CHECK(r.quotient == from_coeffs({1, 1, 1, 1}));
  UniPoly b2 = from_coeffs({1, 1}) * from_coeffs({1, 1}) * from_coeffs({1, 0, 1});
  r = poly_div_exact(b2, from_coeffs({1, 1}));
  CHECK(r.exact);
  CHECK(r.quotient == from_coeffs({1, 1}) * from_coeffs({1, 0, 1}));
  r = poly_div_exact(from_coeffs({1, 0, 1}), from_coeffs({1, 1}));
  CHECK_FALSE(r.exact);
  CHECK_FALSE(r.remainder.is_zero());
  CHECK_THROWS_AS(poly_div_exact(b2, UniPoly{}), std::invalid_argument);
}

TEST_CASE("poly_div_exact recovers random factors") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    UniPoly a = random_poly(rng, 6);
    UniPoly b = random_poly(rng, 4);
    auto r = poly_div_exact(a * b, b);
    REQUIRE(r.exact);
    CHECK(r.quotient == a);
  }
}

TEST_CASE("binomial division") {
  BiLaurent p = binomial(1, 0) * binomial(1, 1) * binomial(2, 1);
  auto q = divide_by_binomial(p, 1, 1);
  REQUIRE(q.has_value());
  CHECK(*q == binomial(1, 0) * binomial(2, 1));
  CHECK_FALSE(divide_by_binomial(p, 0, 1).has_value());
}

TEST_CASE("restrict_to_line examples") {
  PositiveLine diag{1, 1, Rational(1, 2)};
  // 1 - q1 q2 restricted to z1 + z2 = 1/2: the u-powers cancel and e^{pi i} = -1.
  auto r = restrict_to_line(binomial(1, 1), Rational(1, 4), Rational(1, 4), diag);
  REQUIRE(r.terms.size() == 1);
  CHECK(r.terms.at(0) == CycloNum(2));
  BiLaurent plus = BiLaurent::constant(1) + BiLaurent::monomial({1, 1});
  CHECK(restrict_to_line(plus, Rational(1, 4), Rational(1, 4), diag).is_identically_zero());

  PositiveLine vertical{1, 0, Rational(1, 2)};
  r = restrict_to_line(binomial(1, 0), Rational(1, 2), Rational(0), vertical);
  REQUIRE(r.terms.size() == 1);
  CHECK(r.terms.at(0) == CycloNum(2));
  BiLaurent q1plus = BiLaurent::constant(1) + BiLaurent::monomial({1, 0});
  CHECK(restrict_to_line(q1plus, Rational(1, 2), Rational(0), vertical).is_identically_zero());

  CHECK_THROWS(restrict_to_line(binomial(1, 0), Rational(1, 3), Rational(0), vertical));
}

TEST_CASE("restrict_to_line is multiplicative") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(0, 3), c(-2, 2);
  PositiveLine line{1, 2, Rational(5, 6)};
  Rational c1(1, 6), c2(1, 3);
  auto to_map = [](const LineRestriction& r) { return r.terms; };
  for (int trial = 0; trial < 40; ++trial) {
    BiLaurent a, b;
    for (int k = 0; k < 3; ++k) {
      a.add_term({e(rng), e(rng)}, c(rng));
      b.add_term({e(rng), e(rng)}, c(rng));
    }
    auto ra = restrict_to_line(a, c1, c2, line);
    auto rb = restrict_to_line(b, c1, c2, line);
    std::map<int, CycloNum> prod;
    for (auto& [i, x] : ra.terms) {
      for (auto& [j, y] : rb.terms) prod[i + j] += x * y;
    }
    std::erase_if(prod, [](const auto& kv) { return kv.second.is_zero(); });
    CHECK(to_map(restrict_to_line(a * b, c1, c2, line)) == prod);
  }
}

TEST_CASE("exact linear algebra") {
  Matrix m{{CycloNum(1), CycloNum(2)}, {CycloNum(2), CycloNum(4)}};
  CHECK(exact_rank(m) == 1);
  CHECK(determinant(m).is_zero());
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  auto img = multiply(m, ns[0]);
  CHECK(img[0].is_zero());
  CHECK(img[1].is_zero());
  Matrix r{{CycloNum::zeta(5), CycloNum(1)}, {CycloNum(0), CycloNum::zeta(5).conj()}};
  CHECK(determinant(r) == CycloNum(1));
  CHECK(multiply(r, inverse(r)) == identity_matrix(2));
}

TEST_CASE("evaluation at roots of unity agrees with generic evaluation") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    UniPoly p = random_poly(rng, 14);
    for (long m : {2L, 5L, 9L, 12L}) {
      for (long k = 0; k < m; ++k) {
        CHECK(cyclo_eval_root(p, make_rational(k, m)) == cyclo_eval(p, CycloNum::zeta(m, k)));
      }
    }
  }
  BiLaurent q = binomial(2, 1) * binomial(1, 3);
  CHECK(cyclo_eval_root(q, Rational(1, 4), Rational(1, 6)) ==
        cyclo_eval(q, CycloNum::zeta(4), CycloNum::zeta(6)));
}
