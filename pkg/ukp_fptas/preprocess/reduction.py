"""
Greedy lower bound, large/small partition and large-item reduction.

The greedy bound P0 fills the knapsack with copies of the most efficient
item. Items with profit at least T are large; of the small items only
the most efficient one (a_eff) is kept. Large items are reduced to the
smallest item per profit sub-interval.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..exceptions import EmptyInstanceError
from ..model import EpsParams, Instance, IntervalIndex, Item, interval_index


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    """
    Split of an instance at the threshold T.

    Attributes:
        large: Items with profit >= T, in input order
        small_best: Most efficient item with profit < T, if any
        two_p0_item: An item whose profit equals 2 p0, if any
    """

    large: Tuple[Item, ...]
    small_best: Optional[Item] = None
    two_p0_item: Optional[Item] = None


@dataclass
class ReducedLargeSet:
    """
    One smallest large item per profit sub-interval.

    Attributes:
        slots: IntervalIndex -> smallest item seen for that sub-interval
    """

    slots: Dict[IntervalIndex, Item] = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.slots)

    def items(self) -> List[Item]:
        """Slot items ordered by (k, gamma)."""
        return [self.slots[key] for key in sorted(self.slots)]

    def level(self, k: int) -> Dict[int, Item]:
        """gamma -> item for level k (the set I_k)."""
        return {key.gamma: item for key, item in self.slots.items() if key.k == k}


def _most_efficient(items: Iterable[Item]) -> Optional[Item]:
    best = None
    for item in items:
        # strict comparison keeps the lowest index on ties
        if best is None or item.efficiency > best.efficiency:
            best = item
    return best


def greedy_p0(instance: Instance) -> Tuple[Item, int, Fraction]:
    """
    Fill the knapsack with copies of the most efficient item.

    Args:
        instance: Normalized instance

    Returns:
        (item, copies, p0) with copies = floor(1 / size) and
        p0 = profit * copies; p0 >= OPT / 2

    Raises:
        EmptyInstanceError: If the instance has no items
    """
    if not instance.items:
        raise EmptyInstanceError("greedy bound needs at least one item")

    best = _most_efficient(instance.items)
    copies = int(instance.capacity // best.size)
    p0 = best.profit * copies
    logger.debug(f"Greedy item {best.index}: {copies} copies, p0={p0}")
    return best, copies, p0


def partition_items(instance: Instance, params: EpsParams) -> Partition:
    """
    Partition items into large (profit >= T) and small ones.

    Args:
        instance: Normalized instance
        params: Parameters built from greedy_p0 of the same instance

    Returns:
        Partition with the large items, a_eff and any profit-2p0 item
    """
    large = []
    small = []
    two_p0_item = None
    top = 2 * params.p0
    for item in instance.items:
        if item.profit == top and two_p0_item is None:
            two_p0_item = item
        if item.profit >= params.t:
            large.append(item)
        else:
            small.append(item)

    partition = Partition(large=tuple(large), small_best=_most_efficient(small), two_p0_item=two_p0_item)
    logger.debug(
        f"Partition: {len(large)} large, {len(small)} small, "
        f"a_eff={partition.small_best.index if partition.small_best else None}"
    )
    return partition


def reduce_large(large: Sequence[Item], params: EpsParams) -> ReducedLargeSet:
    """
    Keep the smallest item for every profit sub-interval L_{k, gamma}.

    Args:
        large: Items with T <= profit < 2 p0
        params: Interval geometry

    Returns:
        ReducedLargeSet; equal sizes keep the first item encountered
    """
    reduced = ReducedLargeSet()
    for item in large:
        key = interval_index(item.profit, params)
        incumbent = reduced.slots.get(key)
        if incumbent is None or item.size < incumbent.size:
            reduced.slots[key] = item

    logger.debug(f"Reduced {len(large)} large items to {reduced.count} slots")
    return reduced
