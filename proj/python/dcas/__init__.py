"""Exact diagonals, genus, j-invariants and ODE guessing over Q.

Rational results are returned as fractions.Fraction; rational functions
and operator coefficients as expression strings.
"""

import json
import os
from fractions import Fraction

from . import _dcas
from ._dcas import DcasError

__all__ = [
    "DcasError",
    "diagonal",
    "genus",
    "j_invariant",
    "hauptmodul",
    "hypergeom",
    "pullback",
    "guess_ode",
    "apply_ode",
    "verify",
]


def _fracs(coeffs):
    return [Fraction(c) for c in coeffs]


def _strs(coeffs):
    return [str(Fraction(c)) for c in coeffs]


def diagonal(expr, vars, order, force=False):
    """Coefficients a_{n,...,n}, n = 0..order, of expr expanded at the origin."""
    return _fracs(_dcas.diagonal(expr, list(vars), order, force))


def genus(curve, vars):
    """Newton-polygon genus; vars lists the two curve variables, then any coefficient symbols."""
    return json.loads(_dcas.genus(curve, list(vars)))


def j_invariant(curve, vars=("x", "y"), quadratic_in="y", param="p"):
    return _dcas.j_invariant(curve, list(vars), quadratic_in, param)


def hauptmodul(curve, vars=("x", "y"), quadratic_in="y", param="p"):
    """1728/j as an expression in param, or None when j = 0."""
    return _dcas.hauptmodul(curve, list(vars), quadratic_in, param)


def hypergeom(upper, lower, order):
    return _fracs(_dcas.hypergeom(_strs(upper), _strs(lower), order))


def pullback(h, upper, lower=(1,), prefactor=(), order=10, var="x"):
    """Series of prod(base^exp) * pFq(upper; lower; h)."""
    pre = [(base, str(Fraction(e))) for base, e in prefactor]
    return _fracs(_dcas.pullback(pre, _strs(upper), _strs(lower), h, order, var))


def guess_ode(coeffs, max_order, max_degree, margin=10):
    """Polynomial coefficients c_0..c_r of sum c_i D^i, or None."""
    return _dcas.guess_ode(_strs(coeffs), max_order, max_degree, margin)


def apply_ode(op, coeffs):
    return _fracs(_dcas.apply_ode(list(op), _strs(coeffs)))


def _default_registry():
    # A wheel carries its own copy; a build tree uses the compiled-in path.
    if os.environ.get("DCAS_REGISTRY"):
        return None
    bundled = os.path.join(os.path.dirname(__file__), "golden.yaml")
    return bundled if os.path.exists(bundled) else None


def verify(case=None, tag=None, registry=None, seed=_dcas.DEFAULT_SEED):
    """Run one golden case (report dict) or a tagged subset (summary dict)."""
    if registry is None:
        registry = _default_registry()
    return json.loads(_dcas.verify(case, tag, registry, seed))
