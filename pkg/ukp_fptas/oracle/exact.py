"""
Exact reference solvers.

A pseudo-polynomial DP over integer size units (profits stay rational)
and an exhaustive enumeration of copy vectors. Both are ground truth for
tests and the ``verify`` command; each refuses to run beyond its work
budget.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from ..config import config
from ..exceptions import InvalidParameterError, OracleBudgetError
from ..model import Instance, Item, SolutionMultiset


logger = logging.getLogger(__name__)

ItemSource = Union[Instance, Sequence[Item]]


def _items_of(source: ItemSource) -> Tuple[Item, ...]:
    return source.items if isinstance(source, Instance) else tuple(source)


@dataclass(frozen=True)
class GridInstance:
    """
    An instance whose sizes are integer multiples of 1 / denominator.

    Attributes:
        denominator: Units per capacity
        items: Original items
        units: Size of each item in units (1..denominator)
    """

    denominator: int
    items: Tuple[Item, ...]
    units: Tuple[int, ...]

    @classmethod
    def from_items(cls, source: ItemSource, denominator: Optional[int] = None) -> "GridInstance":
        """
        Express item sizes on an integer grid.

        Args:
            source: Instance or items with sizes in (0, 1]
            denominator: Grid resolution; the lcm of the size
                denominators when omitted

        Raises:
            InvalidParameterError: If a size is not a multiple of 1 / denominator
        """
        items = _items_of(source)
        if denominator is None:
            denominator = 1
            for item in items:
                denominator = denominator * item.size.denominator // math.gcd(denominator, item.size.denominator)
        if denominator <= 0:
            raise InvalidParameterError(f"grid denominator must be positive, got {denominator}")

        units = []
        for item in items:
            scaled = item.size * denominator
            if scaled.denominator != 1:
                raise InvalidParameterError(f"item {item.index}: size {item.size} is off the 1/{denominator} grid")
            units.append(int(scaled))
        return cls(denominator=denominator, items=items, units=tuple(units))

    def units_of(self, volume: Fraction) -> int:
        """Largest number of whole units inside ``volume``."""
        return int(Fraction(volume) * self.denominator // 1)


def exact_dp(
    grid: GridInstance,
    capacity_units: Optional[int] = None,
    budget: Optional[int] = None,
) -> Tuple[Fraction, SolutionMultiset]:
    """
    Solve the unbounded knapsack exactly over integer size units.

    best[w] = max(best[w-1], max_j best[w - u_j] + p_j)

    Args:
        grid: Gridded instance
        capacity_units: Volume in units (defaults to the full capacity)
        budget: Maximum DP cells (defaults to ORACLE_DP_BUDGET)

    Returns:
        (opt, witness) with the witness reconstructed from predecessors

    Raises:
        OracleBudgetError: If (capacity + 1) * n exceeds the budget
    """
    capacity = grid.denominator if capacity_units is None else capacity_units
    budget = config.oracle_dp_budget if budget is None else budget
    cells = (capacity + 1) * max(len(grid.items), 1)
    if cells > budget:
        raise OracleBudgetError("exact DP", cells, budget)

    best: List[Fraction] = [Fraction(0)] * (capacity + 1)
    choice: List[int] = [-1] * (capacity + 1)
    for w in range(1, capacity + 1):
        best[w] = best[w - 1]
        for j, (item, units) in enumerate(zip(grid.items, grid.units)):
            if units <= w and best[w - units] + item.profit > best[w]:
                best[w] = best[w - units] + item.profit
                choice[w] = j

    counts = {}
    w = capacity
    while w > 0:
        j = choice[w]
        if j < 0:
            w -= 1
            continue
        index = grid.items[j].index
        counts[index] = counts.get(index, 0) + 1
        w -= grid.units[j]

    witness = SolutionMultiset.from_counts(counts, {item.index: item for item in grid.items})
    logger.debug(f"Exact DP over {capacity} units: opt={best[capacity]}")
    return best[capacity], witness


def brute_force(
    source: ItemSource,
    max_copies: int,
    capacity: Fraction = Fraction(1),
    budget: Optional[int] = None,
) -> Fraction:
    """
    Enumerate every copy vector with at most ``max_copies`` per item.

    Args:
        source: Instance or items
        max_copies: Per-item multiplicity cap
        capacity: Volume to fill
        budget: Maximum nominal search space (defaults to BRUTE_FORCE_BUDGET)

    Returns:
        Best total profit (0 for an empty instance)

    Raises:
        OracleBudgetError: If (max_copies + 1)^n exceeds the budget
    """
    items = _items_of(source)
    budget = config.brute_force_budget if budget is None else budget
    space = (max_copies + 1) ** len(items)
    if space > budget:
        raise OracleBudgetError("brute force", space, budget)

    def search(position: int, remaining: Fraction) -> Fraction:
        if position == len(items):
            return Fraction(0)
        item = items[position]
        most = min(max_copies, int(remaining // item.size))
        return max(
            copies * item.profit + search(position + 1, remaining - copies * item.size)
            for copies in range(most + 1)
        )

    return search(0, Fraction(capacity))
