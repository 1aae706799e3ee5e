"""
Solver Module

End-to-end approximation pipeline and certificate handling.
"""

from .engine import (
    Branch,
    FptasSolver,
    SolveResult,
    SolverStats,
    backtrack_solution,
    combine_with_small,
    solve,
    verify_certificate,
)

__all__ = [
    "Branch",
    "FptasSolver",
    "SolveResult",
    "SolverStats",
    "backtrack_solution",
    "combine_with_small",
    "solve",
    "verify_certificate",
]
