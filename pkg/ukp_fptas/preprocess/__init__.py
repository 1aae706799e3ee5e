"""
Preprocess Module

Greedy bound, item partition and large-item reduction.
"""

from .reduction import Partition, ReducedLargeSet, greedy_p0, partition_items, reduce_large

__all__ = ["Partition", "ReducedLargeSet", "greedy_p0", "partition_items", "reduce_large"]
