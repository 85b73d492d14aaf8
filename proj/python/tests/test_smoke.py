import json
import math
from fractions import Fraction

import pytest

import coxsupport as cs


def test_degrees_and_order():
    assert cs.degrees("H3") == [2, 6, 10]
    assert cs.order("F4") == 1152


def test_poincare_matches_enumeration():
    assert cs.poincare("B3") == cs.poincare("B3", brute_force=True)


def test_support_example():
    strata = cs.support_strata("B2", Fraction(1, 2))
    assert [s["stabilizer"] for s in strata if s["in_support"]] == ["B2"]
    assert cs.is_finite_dim("B2", "1/2")


def test_finite_dim_lists():
    assert cs.finite_dim_denominators("H3", 30) == {2, 6, 10}
    assert cs.finite_dim_denominators("I2:12", 30) == {2, 3, 4, 6, 12}


def test_two_parameters():
    assert cs.is_finite_dim("F4", c1="1/2", c2="1/2")
    assert cs.sigma_families("F4", "1/2", "1/2") == ["2a"]


def test_macdonald_mehta():
    assert cs.mm_exact("A1", "-1/2") == "Γ(2)/Γ(3/2)"
    assert math.isclose(cs.mm_value("A1", "-1/2"), 2 / math.sqrt(math.pi), rel_tol=1e-12)
    assert math.isclose(cs.mm_numeric("B2", "-1/4"), cs.mm_value("B2", "-1/4"), rel_tol=1e-6)


def test_trig_example():
    in_support = {s["stabilizer"]: s["torus"] for s in cs.trig_strata("B2", "1/2") if s["in_support"]}
    assert in_support == {"B2": "(1, 1)", "A1(c1)xA1(c1)": "(-1, -1)"}


def test_elliptic():
    assert cs.is_elliptic_number("H3", 6)
    assert cs.eigen_search("H3", 10)["regular_elliptic"]
    with pytest.raises(ValueError):
        cs.is_elliptic_number("A2", 1)


def test_dunkl_oracle():
    assert cs.check_relations("B2", "1/2", "1/4", dmax=3)
    q = cs.quotient_dimension("B2", "1/2", 8)
    assert q["finite"] and q["dimension"] == 4


def test_errors():
    with pytest.raises(cs.ScopeError):
        cs.eigen_search("E8", 30)
    with pytest.raises(TypeError):
        cs.is_finite_dim("A2", 0.5)


def test_cli_envelope():
    code, out, _ = cs.run_cli("support", "B2", "--c", "1/2", "--json")
    assert code == 0
    assert json.loads(out)["result"]["finite_dim"] is True
    assert cs.run_cli("elliptic", "E8", "--m", "30", "--verify")[0] == 3
