"""
Item and instance model.

Profits and sizes are exact rationals. The engine always works on a
capacity-normalized instance (capacity 1); oversized items are dropped
during normalization and counted.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Tuple, Union

from ..exceptions import EmptyInstanceError, InvalidParameterError


logger = logging.getLogger(__name__)

Rational = Fraction
RationalLike = Union[Fraction, int, str]

ONE = Fraction(1)


@dataclass(frozen=True)
class Item:
    """
    A knapsack item with exact profit and size.

    Attributes:
        profit: Profit in (0, 1]
        size: Size in (0, 1] relative to the normalized capacity
        index: Ordinal of the item in the input list
    """

    profit: Fraction
    size: Fraction
    index: int

    def __post_init__(self):
        if not 0 < self.profit <= 1:
            raise InvalidParameterError(f"item {self.index}: profit {self.profit} outside (0, 1]")
        if not 0 < self.size <= 1:
            raise InvalidParameterError(f"item {self.index}: size {self.size} outside (0, 1]")

    @property
    def efficiency(self) -> Fraction:
        """Profit per unit of size."""
        return self.profit / self.size


@dataclass(frozen=True)
class Instance:
    """
    An Unbounded Knapsack instance with capacity normalized to 1.

    Attributes:
        items: Items in input order (their ``index`` is the input ordinal)
        capacity: Always 1 once normalized
        dropped: Number of input items removed because they did not fit
    """

    items: Tuple[Item, ...]
    capacity: Fraction = ONE
    dropped: int = field(default=0, compare=False)

    @classmethod
    def from_pairs(
        cls,
        pairs: Iterable[Tuple[RationalLike, RationalLike]],
        capacity: RationalLike = 1,
    ) -> "Instance":
        """
        Build a normalized instance from raw (profit, size) pairs.

        Sizes are divided by the capacity; items whose normalized size
        exceeds 1 are dropped with a warning.

        Args:
            pairs: Raw (profit, size) pairs in input order
            capacity: Knapsack capacity in the same unit as the sizes

        Returns:
            Normalized instance
        """
        capacity = Fraction(capacity)
        if capacity <= 0:
            raise InvalidParameterError(f"capacity must be positive, got {capacity}")

        items = []
        dropped = 0
        for index, (profit, size) in enumerate(pairs):
            profit, size = Fraction(profit), Fraction(size)
            if profit <= 0:
                raise InvalidParameterError(f"item {index}: nonpositive profit {profit}")
            if size <= 0:
                raise InvalidParameterError(f"item {index}: nonpositive size {size}")
            normalized = size / capacity
            if normalized > 1:
                dropped += 1
                continue
            items.append(Item(profit=profit, size=normalized, index=index))

        if dropped:
            logger.warning(f"Dropped {dropped} item(s) larger than the capacity")
        return cls(items=tuple(items), dropped=dropped)

    def __len__(self) -> int:
        return len(self.items)

    def require_items(self) -> None:
        """Raise EmptyInstanceError if no item survived normalization."""
        if not self.items:
            raise EmptyInstanceError("instance has no item that fits the knapsack")

    def by_index(self) -> dict:
        """Map input ordinal to item."""
        return {item.index: item for item in self.items}
