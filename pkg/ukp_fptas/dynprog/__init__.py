"""
Dynamic Programming Module

Approximate tuple DP with bucket rounding and dominance removal.
"""

from .tuples import (
    DpResult,
    Extend,
    Origin,
    Single,
    TupleEntry,
    TupleLevel,
    remove_dominated,
    run_dp,
)

__all__ = [
    "DpResult",
    "Extend",
    "Origin",
    "Single",
    "TupleEntry",
    "TupleLevel",
    "remove_dominated",
    "run_dp",
]
