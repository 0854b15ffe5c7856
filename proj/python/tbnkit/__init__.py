"""Thermodynamic binding network analysis.

TBNs and configurations are passed as text in the ``tbn`` file format; reports
come back as JSON strings, which the helpers below decode.
"""

import json

from ._core import (
    BudgetExceeded,
    ParseError,
    TbnError,
    generate,
    is_saturated,
    normalize,
    polymer_size_bound,
    reference_configuration,
    run_cli,
    upper_bound_log10,
)
from . import _core

__all__ = [
    "BudgetExceeded",
    "ParseError",
    "TbnError",
    "entropy_gap",
    "generate",
    "is_saturated",
    "normalize",
    "polymer_size_bound",
    "reference_configuration",
    "run_cli",
    "solve",
    "upper_bound_log10",
    "verify",
]


def solve(tbn, all=True, lex=True):
    return json.loads(_core.solve(tbn, "json", all, lex))


def entropy_gap(tbn, budget=50_000_000):
    return json.loads(_core.entropy_gap(tbn, "json", budget))


def verify(n, k, translators=False, budget=20_000_000):
    return json.loads(_core.verify(n, k, translators, budget, "json"))
