#include <doctest.h>

#include "coxsupport/elliptic.hpp"
#include "coxsupport/linalg.hpp"
#include "coxsupport/poincare.hpp"
#include "coxsupport/support.hpp"

#include <string>

using namespace coxsupport;

namespace {

CoxeterType T(const char* s) { return CoxeterType::parse(s); }

}  // namespace

TEST_CASE("elliptic number examples") {
  CHECK(is_elliptic_number(T("A2"), 3));
  CHECK_FALSE(is_elliptic_number(T("A2"), 2));
  CHECK(is_elliptic_number(T("H3"), 6));
  CHECK(is_elliptic_number(T("B2"), 4));
  CHECK_THROWS_AS(is_elliptic_number(T("A2"), 1), std::invalid_argument);
  CHECK_THROWS_AS(is_elliptic_number(T("A2"), 0), std::invalid_argument);
}

TEST_CASE("regular number examples") {
  CHECK(is_regular_number(T("A2"), 2));
  CHECK(is_regular_number(T("B2"), 4));
  CHECK(is_regular_number(T("A3"), 3));
  CHECK_FALSE(is_elliptic_number(T("A3"), 3));
  CHECK(is_regular_number(T("A3"), 1));
  CHECK_FALSE(is_regular_number(T("B3"), 4));
}

TEST_CASE("eigenspace oracle examples") {
  auto a1 = brute_force_search(CoxeterLabel::A(1), 2);
  REQUIRE(a1.reports.size() == 1);
  CHECK(a1.reports[0].dimension == 1);
  CHECK(a1.reports[0].regular);
  CHECK(a1.reports[0].elliptic);

  auto h3 = brute_force_search(CoxeterLabel::H(3), 10);
  CHECK(h3.regular_elliptic);
  CHECK(h3.max_dimension == 1);

  auto b2 = brute_force_search(CoxeterLabel::B(2), 4);
  CHECK(b2.regular_elliptic);
  auto a3 = brute_force_search(CoxeterLabel::A(3), 3);
  CHECK(a3.regular);
  CHECK_FALSE(a3.regular_elliptic);

  auto b3 = brute_force_search(CoxeterLabel::B(3), 4);
  CHECK(b3.regular == is_regular_number(T("B3"), 4));
  CHECK(b3.regular_elliptic == is_elliptic_number(T("B3"), 4));
}

TEST_CASE("oracle invariants of each report") {
  for (const char* t : {"A3", "B3", "H3", "I2:8"}) {
    auto l = CoxeterLabel::parse(t);
    const auto& rs = root_system(l);
    auto elements = enumerate_elements(l);
    for (int m = 2; m <= 10; ++m) {
      for (const auto& r : brute_force_search(l, m).reports) {
        const auto& g = elements[r.element];
        CHECK(g.order() % m == 0);
        Matrix a = g.matrix(rs);
        for (int i = 0; i < rs.rank; ++i) a[i][i] -= CycloNum(1);
        CHECK(r.elliptic == !determinant(a).is_zero());
        CHECK(r.dimension <= rs.rank);
      }
    }
  }
}

TEST_CASE("criterion agrees with the oracle") {
  std::vector<std::string> names = {"A1", "A2", "A3", "A4", "B2", "B3", "D4", "H3"};
  for (int p = 3; p <= 12; ++p) names.push_back("I2:" + std::to_string(p));
  for (const auto& name : names) {
    auto l = CoxeterLabel::parse(name);
    auto w = CoxeterType::single(l);
    for (int m = 2; m <= 30; ++m) {
      auto s = brute_force_search(l, m);
      INFO(name << " m=" << m);
      CHECK(is_elliptic_number(w, m) == s.regular_elliptic);
      CHECK(is_regular_number(w, m) == s.regular);
      if (s.regular) CHECK(s.max_dimension == a_count(w, m));
      if (l.crystallographic()) CHECK(is_elliptic_number(w, m) == is_finite_dim_equal(w, make_rational(1, m)));
    }
  }
}
