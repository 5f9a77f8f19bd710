"""Exact rank bounds and verifiable decompositions for partially symmetric
tensor products of W states.

Thin wrapper over the C++ core: every function returns plain dicts/lists
decoded from the core's JSON payloads. Exact scalars are encoded as
"num/den" strings; pass ints, "num/den" strings, or fractions.Fraction.
"""

import json as _json
from fractions import Fraction as _Fraction

from . import _core

__all__ = [
    "sylvester",
    "w_product",
    "lower_bound",
    "flatten",
    "decompose",
    "verify",
    "check_condition",
    "bound_report",
    "submultiplicativity_table",
    "run_acceptance",
]


def _scalar(c):
    if isinstance(c, _Fraction):
        return f"{c.numerator}/{c.denominator}"
    return c


def _dump(x):
    return x if isinstance(x, str) else _json.dumps(x)


def sylvester(coeffs, field="q", tol=1e-9):
    """Rank, border rank, and a verified decomposition of the binary form
    sum_j coeffs[j] * x^(d-j) y^j."""
    form = {"degree": len(coeffs) - 1, "coeffs": [_scalar(c) for c in coeffs]}
    return _json.loads(_core.sylvester(_json.dumps(form), field, tol))


def w_product(multidegree):
    """Coefficient tensor of the product of W states with the given degrees."""
    return _json.loads(_core.w_product(list(multidegree)))


def lower_bound(tensor):
    """Best lower-bound certificate (flattening, plus the merge bound for W
    products) for an exact tensor."""
    return _json.loads(_core.lower_bound(_dump(tensor)))


def flatten(tensor, spec):
    """Flattening matrix and its exact rank for one exponent spec."""
    return _json.loads(_core.flatten(_dump(tensor), list(spec)))


def decompose(multidegree, method="curve", tol=1e-9):
    """Decompose the W product by 'thm33', 'curve', or 'combine'."""
    return _json.loads(_core.decompose(list(multidegree), method, tol))


def verify(decomposition, target, tol=1e-9):
    """Re-verify a decomposition against a target tensor; exact fields compare
    coefficient-for-coefficient, numeric payloads use the residual."""
    return _json.loads(_core.verify(_dump(decomposition), _dump(target), tol))


def check_condition(k, xi=None):
    """Exact check of the coupling condition for k factors (default scheme
    when xi is omitted)."""
    xi_strings = [] if xi is None else [str(_scalar(x)) for x in xi]
    return _json.loads(_core.check_condition(int(k), xi_strings))


def bound_report(multidegree):
    """Lower/upper bound report with verified witnesses for the W product."""
    return _json.loads(_core.bound_report(list(multidegree)))


def submultiplicativity_table(max_k=3, max_d=4):
    """Bound-report sweep over the diagonal formats (d,...,d)."""
    return _json.loads(_core.submultiplicativity_table(int(max_k), int(max_d)))


def run_acceptance(seed=20240613):
    """Run the ten-point reproduction table; returns one record per criterion."""
    return _json.loads(_core.run_acceptance(int(seed)))
