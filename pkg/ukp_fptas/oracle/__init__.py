"""
Oracle Module

Exact ground truth: pseudo-polynomial DP, exhaustive search and
structured-solution enumerators.
"""

from .exact import GridInstance, brute_force, exact_dp
from .structured import exact_structured_tuples, structured_enum, structured_opt

__all__ = [
    "GridInstance",
    "brute_force",
    "exact_dp",
    "exact_structured_tuples",
    "structured_enum",
    "structured_opt",
]
