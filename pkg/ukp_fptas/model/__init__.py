"""
Model Module

Exact rational items, instances, certificates and interval geometry.
"""

from .items import Item, Instance, Rational
from .params import EpsParams, IntervalIndex, normalize_epsilon, interval_index, xi_index
from .solution import SolutionMultiset

__all__ = [
    "Item",
    "Instance",
    "Rational",
    "EpsParams",
    "IntervalIndex",
    "normalize_epsilon",
    "interval_index",
    "xi_index",
    "SolutionMultiset",
]
