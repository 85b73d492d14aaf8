#include <doctest.h>

#include "coxsupport/mehta.hpp"
#include "coxsupport/poincare.hpp"
#include "coxsupport/support.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

using namespace coxsupport;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("Gamma product bookkeeping") {
  auto a1 = mm_value(CoxeterType::parse("A1"), q(-1, 2));
  CHECK(a1.to_string() == "Γ(2)/Γ(3/2)");
  CHECK(a1.value() == doctest::Approx(2 / std::sqrt(std::numbers::pi)).epsilon(1e-12));
  auto zero = mm_value(CoxeterType::parse("E8"), q(0));
  CHECK(zero.numerator.empty());
  CHECK(zero.denominator.empty());
  CHECK(zero.value() == 1.0);
  auto b2 = mm_value(CoxeterType::parse("B2"), q(1, 2));
  CHECK(b2.order() == 2);
  CHECK_THROWS_AS(b2.value(), std::domain_error);
}

TEST_CASE("Gamma values with negative arguments use the reflection sign") {
  GammaProduct g{{q(-1, 2)}, {}};
  CHECK(g.value() == doctest::Approx(-2 * std::sqrt(std::numbers::pi)).epsilon(1e-12));
  GammaProduct h{{q(-3, 2)}, {q(1, 2)}};
  CHECK(h.value() == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("two-parameter values") {
  auto i4 = CoxeterType::parse("I2:4");
  for (long p : {-3, -1, 1, 3, 5}) {
    CHECK(mm_value2(i4, q(p, 7), q(p, 7)) == mm_value(i4, q(p, 7)));
  }
  CHECK(mm_value2(CoxeterType::parse("I2:10"), q(0), q(0)).numerator.empty());
  auto b2 = mm_value2(CoxeterType::parse("B2"), q(-1, 3), q(-1, 5));
  CHECK(b2.value() == doctest::Approx(mm_value2(i4, q(-1, 3), q(-1, 5)).value()).epsilon(1e-12));
  CHECK_THROWS_AS(mm_value2(CoxeterType::parse("A3"), q(1), q(1)), std::invalid_argument);
}

TEST_CASE("two-parameter diagonal equals the one-parameter value") {
  for (const char* t : {"B2", "B3", "B4", "F4", "G2", "I2:8"}) {
    auto w = CoxeterType::parse(t);
    for (long p : {-7, -3, -1}) {
      auto c = q(p, 5);
      CHECK_MESSAGE(mm_value2(w, c, c).value() == doctest::Approx(mm_value(w, c).value()).epsilon(1e-10), t);
    }
  }
}

TEST_CASE("criterion chain: a-counts, Gamma orders and Poincare ratios") {
  for (const char* t : {"A3", "B3", "D4", "E6", "F4", "H3", "I2:9"}) {
    auto w = CoxeterType::parse(t);
    for (const auto& pc : standard_parabolics(w)) {
      auto ratio = poincare_ratio(w, pc.type).quotient;
      for (int m = 2; m <= 30; ++m) {
        for (int p = 1; p < m; ++p) {
          if (std::gcd(p, m) != 1) continue;
          bool by_count = a_count(w, m) == a_count(pc.type, m);
          CHECK(mm_ratio_nonzero(w, pc.type, q(p, m)) == by_count);
          CHECK(in_support_equal(w, pc.type, q(p, m)) == by_count);
          CHECK(!cyclo_eval_root(ratio, q(p, m)).is_zero() == by_count);
        }
      }
    }
  }
  CHECK_FALSE(mm_ratio_nonzero(CoxeterType::parse("B2"), CoxeterType::parse("A1"), q(1, 2)));
  CHECK(mm_ratio_nonzero(CoxeterType::parse("A2"), CoxeterType::parse("A1"), q(1, 2)));
  CHECK(mm_ratio_nonzero(CoxeterType::parse("H4"), CoxeterType::parse("H4"), q(1, 5)));
}

TEST_CASE("two-parameter Gamma orders agree with the positive-line test") {
  for (const char* t : {"B2", "B3", "F4", "G2", "I2:8"}) {
    auto w = CoxeterType::parse(t);
    for (const auto& pc : standard_parabolics(w)) {
      for (int p1 = -6; p1 <= 18; ++p1) {
        for (int p2 = -6; p2 <= 18; ++p2) {
          ParamPair c{q(p1, 6), q(p2, 6)};
          CHECK_MESSAGE(mm_ratio_nonzero2(w, pc.type, c.first, c.second) == in_support_two(w, pc.type, c).in_support,
                        t << " " << pc.type.name() << " (" << p1 << "/6, " << p2 << "/6)");
        }
      }
    }
  }
}

TEST_CASE("quadrature reproduces the Gamma products") {
  auto a1 = mm_numeric(CoxeterLabel::A(1), -0.5, -0.5);
  CHECK(std::abs(a1.value - 1.1283791670955126) < 1e-8);
  auto i4 = mm_numeric(CoxeterLabel::I2(4), -0.5, -0.5);
  CHECK(rel(i4.value, mm_value2(CoxeterType::parse("I2:4"), q(-1, 2), q(-1, 2)).value()) < 1e-6);
  auto a2 = mm_numeric(CoxeterLabel::A(2), -0.25, -0.25);
  double expect = std::tgamma(1.5) * std::tgamma(1.75) / (std::tgamma(1.25) * std::tgamma(1.25));
  CHECK(rel(a2.value, expect) < 1e-6);
  auto b2 = mm_numeric(CoxeterLabel::B(2), -0.5, -0.25);
  CHECK(rel(b2.value, mm_value2(CoxeterType::parse("B2"), q(-1, 2), q(-1, 4)).value()) < 1e-6);
  CHECK_THROWS(mm_numeric(CoxeterLabel::A(3), -0.5, -0.5));
  CHECK_THROWS(mm_numeric(CoxeterLabel::A(1), 0.5, 0.5));
}

TEST_CASE("Monte Carlo spot checks") {
  for (const char* t : {"A1", "B2"}) {
    auto l = CoxeterLabel::parse(t);
    auto mc = mm_numeric(l, -0.25, -0.25, Quadrature::MonteCarlo);
    double exact = mm_value(CoxeterType::single(l), q(-1, 4)).value();
    CHECK_MESSAGE(rel(mc.value, exact) < 1e-3, t << " " << mc.value << " vs " << exact << " se " << mc.error);
  }
}
