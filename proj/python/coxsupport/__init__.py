"""Support of spherical representations of rational Cherednik algebras.

Parameters accept int, str ("p/q") or fractions.Fraction; rational results
come back as Fraction.
"""

from fractions import Fraction

from . import _core
from ._core import ScopeError

__all__ = [
    "ScopeError",
    "degrees",
    "order",
    "poincare",
    "support_strata",
    "is_finite_dim",
    "finite_dim_denominators",
    "sigma_families",
    "mm_exact",
    "mm_value",
    "mm_numeric",
    "trig_strata",
    "is_elliptic_number",
    "is_regular_number",
    "eigen_search",
    "check_relations",
    "quotient_dimension",
    "run_cli",
]


def _q(c):
    if isinstance(c, float):
        raise TypeError("parameters must be exact rationals, not float")
    return str(Fraction(c))


def degrees(t):
    return _core.degrees(t)


def order(t):
    return int(_core.order(t))


def poincare(t, two=False, brute_force=False):
    if brute_force:
        return _core.poincare_bruteforce(t)
    return _core.poincare_two(t) if two else _core.poincare(t)


def support_strata(t, c=None, c1=None, c2=None):
    if c is not None:
        return _core.support_strata(t, _q(c))
    return _core.support_strata_two(t, _q(c1), _q(c2))


def is_finite_dim(t, c=None, c1=None, c2=None):
    if c is not None:
        return _core.is_finite_dim(t, _q(c))
    return _core.is_finite_dim_two(t, _q(c1), _q(c2))


def finite_dim_denominators(t, m_max):
    return set(_core.finite_dim_denominators(t, m_max))


def sigma_families(t, c1, c2):
    return _core.sigma_families(t, _q(c1), _q(c2))


def mm_exact(t, c):
    return _core.mm_exact(t, _q(c))


def mm_value(t, c=None, c1=None, c2=None):
    if c is not None:
        return _core.mm_value(t, _q(c))
    return _core.mm_value_two(t, _q(c1), _q(c2))


def mm_numeric(t, c1, c2=None):
    return _core.mm_numeric(t, float(Fraction(c1)), float(Fraction(c1 if c2 is None else c2)))


def trig_strata(t, c):
    return _core.trig_strata(t, _q(c))


def is_elliptic_number(t, m):
    return _core.is_elliptic_number(t, m)


def is_regular_number(t, m):
    return _core.is_regular_number(t, m)


def eigen_search(t, m):
    return _core.eigen_search(t, m)


def check_relations(t, c1, c2=None, dmax=4):
    return _core.check_relations(t, _q(c1), _q(c1 if c2 is None else c2), dmax)


def quotient_dimension(t, c, dmax):
    return _core.quotient_dimension(t, _q(c), dmax)


def run_cli(*args):
    """Runs the command-line tool in process; returns (exit code, stdout, stderr)."""
    return _core.run_cli(list(args))
