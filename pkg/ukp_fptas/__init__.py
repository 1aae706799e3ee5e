"""
UKP-FPTAS: an approximation scheme for the Unbounded Knapsack Problem.

This package provides tools for:
- Exact rational items, instances and certificates
- Interval geometry, reduction and gluing of large items
- The bucketed dynamic program over glued items
- Exact oracles for checking the (1 - eps) guarantee
- Instance files, seeded generators and benchmarks
"""

__version__ = "0.1.0"
__author__ = "UKP-FPTAS Team"

from .config import config
from .model import Instance, Item, SolutionMultiset
from .solver import FptasSolver, SolveResult, solve
from .oracle import GridInstance, exact_dp
from .harness import BenchRunner, generate_instance, parse_instance

__all__ = [
    "config",
    "Instance",
    "Item",
    "SolutionMultiset",
    "FptasSolver",
    "SolveResult",
    "solve",
    "GridInstance",
    "exact_dp",
    "BenchRunner",
    "generate_instance",
    "parse_instance",
]
