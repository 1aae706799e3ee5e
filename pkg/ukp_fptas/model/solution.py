"""
Solution multisets (the certificates returned by the solver).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from .items import Item


@dataclass(frozen=True)
class SolutionMultiset:
    """
    Multiset of base items with cached totals.

    Attributes:
        counts: Item index -> multiplicity (every multiplicity >= 1)
        total_profit: Sum of profit * multiplicity
        total_size: Sum of size * multiplicity
    """

    counts: Mapping[int, int] = field(default_factory=dict)
    total_profit: Fraction = Fraction(0)
    total_size: Fraction = Fraction(0)

    @classmethod
    def empty(cls) -> "SolutionMultiset":
        return cls()

    @classmethod
    def of(cls, item: Item, copies: int = 1) -> "SolutionMultiset":
        """Multiset holding ``copies`` copies of one item."""
        if copies <= 0:
            return cls()
        return cls(
            counts={item.index: copies},
            total_profit=item.profit * copies,
            total_size=item.size * copies,
        )

    @classmethod
    def from_counts(cls, counts: Mapping[int, int], items: Mapping[int, Item]) -> "SolutionMultiset":
        """Build a multiset and its totals from counts over ``items``."""
        kept = {index: count for index, count in counts.items() if count > 0}
        profit = sum((items[i].profit * c for i, c in kept.items()), Fraction(0))
        size = sum((items[i].size * c for i, c in kept.items()), Fraction(0))
        return cls(counts=dict(sorted(kept.items())), total_profit=profit, total_size=size)

    def merge(self, other: "SolutionMultiset") -> "SolutionMultiset":
        """Multiset union (multiplicities add)."""
        counts: Dict[int, int] = dict(self.counts)
        for index, count in other.counts.items():
            counts[index] = counts.get(index, 0) + count
        return SolutionMultiset(
            counts=dict(sorted(counts.items())),
            total_profit=self.total_profit + other.total_profit,
            total_size=self.total_size + other.total_size,
        )

    def scaled(self, factor: int) -> "SolutionMultiset":
        """Every multiplicity multiplied by ``factor``."""
        if factor <= 0:
            return SolutionMultiset()
        return SolutionMultiset(
            counts={i: c * factor for i, c in self.counts.items()},
            total_profit=self.total_profit * factor,
            total_size=self.total_size * factor,
        )

    def takes(self) -> Iterable[Tuple[int, int]]:
        """(index, multiplicity) pairs in index order."""
        return sorted(self.counts.items())

    def recompute(self, items: Mapping[int, Item]) -> Tuple[Fraction, Fraction]:
        """Totals recomputed from ``items`` (ignores the cache)."""
        profit = sum((items[i].profit * c for i, c in self.counts.items()), Fraction(0))
        size = sum((items[i].size * c for i, c in self.counts.items()), Fraction(0))
        return profit, size

    def is_feasible(self, capacity: Fraction = Fraction(1)) -> bool:
        return self.total_size <= capacity
