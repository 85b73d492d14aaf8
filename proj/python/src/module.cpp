#include "cli.hpp"
#include "coxsupport/dunkl.hpp"
#include "coxsupport/elliptic.hpp"
#include "coxsupport/mehta.hpp"
#include "coxsupport/poincare.hpp"
#include "coxsupport/support.hpp"
#include "coxsupport/trig.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace coxsupport;

namespace {

CoxeterType type_of(const std::string& s) { return CoxeterType::parse(s); }
CoxeterLabel label_of(const std::string& s) { return CoxeterLabel::parse(s); }
Rational rat(const std::string& s) { return parse_rational(s); }

py::dict stratum_dict(const Stratum& s) {
  py::dict d;
  d["stabilizer"] = s.parabolic.type.name();
  d["nodes"] = s.parabolic.nodes;
  d["codimension"] = s.codimension;
  d["in_support"] = s.in_support;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact support and finite-dimensionality computations for rational Cherednik algebras";

  py::register_exception<ScopeError>(m, "ScopeError");

  m.def("type_name", [](const std::string& t) { return type_of(t).name(); });
  m.def("degrees", [](const std::string& t) { return type_of(t).degrees(); });
  m.def("order", [](const std::string& t) { return type_of(t).order().get_str(); });
  m.def("a_count", [](const std::string& t, int mm) { return a_count(type_of(t), mm); });
  m.def("poincare", [](const std::string& t) { return to_string(poincare1(type_of(t))); });
  m.def("poincare_two", [](const std::string& t) { return to_string(poincare2(type_of(t)).expand()); });
  m.def("poincare_bruteforce", [](const std::string& t) { return to_string(poincare_bruteforce1(label_of(t))); });

  m.def("support_strata", [](const std::string& t, const std::string& c) {
    py::list out;
    for (const auto& s : support_strata(type_of(t), rat(c))) out.append(stratum_dict(s));
    return out;
  });
  m.def("support_strata_two", [](const std::string& t, const std::string& c1, const std::string& c2) {
    py::list out;
    for (const auto& s : support_strata_two(type_of(t), {rat(c1), rat(c2)})) out.append(stratum_dict(s));
    return out;
  });
  m.def("is_finite_dim", [](const std::string& t, const std::string& c) { return is_finite_dim_equal(type_of(t), rat(c)); });
  m.def("is_finite_dim_two", [](const std::string& t, const std::string& c1, const std::string& c2) {
    return is_finite_dim_two(type_of(t), {rat(c1), rat(c2)});
  });
  m.def("finite_dim_denominators",
        [](const std::string& t, int m_max) { return finite_dim_denominators(type_of(t), m_max); });
  m.def("sigma_families", [](const std::string& t, const std::string& c1, const std::string& c2) {
    std::vector<std::string> out;
    for (const auto& w : sigma_member(type_of(t), {rat(c1), rat(c2)})) out.push_back(w.family);
    return out;
  });

  m.def("mm_exact", [](const std::string& t, const std::string& c) { return mm_value(type_of(t), rat(c)).to_string(); });
  m.def("mm_value", [](const std::string& t, const std::string& c) { return mm_value(type_of(t), rat(c)).value(); });
  m.def("mm_value_two", [](const std::string& t, const std::string& c1, const std::string& c2) {
    return mm_value2(type_of(t), rat(c1), rat(c2)).value();
  });
  m.def("mm_numeric", [](const std::string& t, double c1, double c2) {
    return mm_numeric(label_of(t), c1, c2).value;
  });

  m.def("trig_strata", [](const std::string& t, const std::string& c) {
    py::list out;
    for (const auto& s : trig_support_strata(label_of(t), rat(c))) {
      py::dict d;
      d["stabilizer"] = s.type.name();
      d["torus"] = s.witness.torus_string();
      d["in_support"] = s.in_support;
      out.append(d);
    }
    return out;
  });

  m.def("is_elliptic_number", [](const std::string& t, int mm) { return is_elliptic_number(type_of(t), mm); });
  m.def("is_regular_number", [](const std::string& t, int mm) { return is_regular_number(type_of(t), mm); });
  m.def("eigen_search", [](const std::string& t, int mm) {
    auto s = brute_force_search(label_of(t), mm);
    py::dict d;
    d["regular"] = s.regular;
    d["regular_elliptic"] = s.regular_elliptic;
    d["max_dimension"] = s.max_dimension;
    d["elements"] = s.reports.size();
    return d;
  });

  m.def("check_relations", [](const std::string& t, const std::string& c1, const std::string& c2, int dmax) {
    return !check_relations(DunklSystem(label_of(t), rat(c1), rat(c2)), dmax).has_value();
  });
  m.def("quotient_dimension", [](const std::string& t, const std::string& c, int dmax) {
    auto q = measure_quotient(DunklSystem(label_of(t), rat(c)), dmax);
    py::dict d;
    d["finite"] = q.finite;
    d["dimension"] = q.dimension;
    d["ranks"] = q.ranks;
    return d;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
