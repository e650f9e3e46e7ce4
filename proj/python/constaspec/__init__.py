"""Factor counts, LCD and self-dual codes for x^n - lambda over finite fields.

Instances are given as ``n`` plus either ``q`` (euclidean, over GF(q)) or
``base`` (hermitian, over GF(base^2)), and either ``order`` (the order of
the canonical lambda) or ``lam`` (lambda as a canonical field encoding).
"""

import json

from . import _core
from ._core import Error, divisors, euler_phi, multiplicative_order, negative_one_power

__all__ = [
    "Error",
    "analyze",
    "count_lcd",
    "cross_validate",
    "divisors",
    "euler_phi",
    "factor",
    "multiplicative_order",
    "negative_one_power",
    "self_dual",
    "table",
]


def analyze(n, *, q=None, base=None, order=None, lam=None):
    """Closed-form factor counts, as the same dict the CLI prints with --format json."""
    return json.loads(_core.analyze_json(n, q=q, base=base, order=order, lam=lam))


def factor(n, *, q=None, base=None, order=None, lam=None, seed=0, budget=None):
    """Irreducible factors split into symmetric ones, mate pairs and unpaired ones."""
    return json.loads(
        _core.factor_json(n, q=q, base=base, order=order, lam=lam, seed=seed, budget=budget)
    )


def count_lcd(n, *, q=None, base=None, order=None, lam=None):
    return int(_core.count_lcd_str(n, q=q, base=base, order=order, lam=lam))


def self_dual(n, *, q=None, base=None, order=None, lam=None):
    result = json.loads(_core.self_dual_json(n, q=q, base=base, order=order, lam=lam))
    result["count"] = int(result["count"])
    return result


def cross_validate(n, *, q=None, base=None, order=None, lam=None, seed=0, budget=None):
    """Compare the closed-form counts with an explicit factorization."""
    return json.loads(
        _core.cross_validate_json(n, q=q, base=base, order=order, lam=lam, seed=seed, budget=budget)
    )


def table(preset):
    return json.loads(_core.table_json(preset))
