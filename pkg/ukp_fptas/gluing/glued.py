"""
Item gluing.

Two items whose combined size fits the knapsack are glued into one item
with summed profit and size. Gluing the reduced large items level by
level yields the sets tilde-I_0..tilde-I_kappa; a bundle of a_eff copies
forms the composite large item a_eff^c. Every glued item keeps its
provenance so it can be expanded back into base items.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from ..model import EpsParams, IntervalIndex, Item, SolutionMultiset, interval_index
from ..preprocess import ReducedLargeSet
from ..utils import ceil_div


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Leaf:
    """A base item taken once."""

    item: Item


@dataclass(frozen=True)
class Pair:
    """Two glued items combined."""

    left: "GluedItem"
    right: "GluedItem"


@dataclass(frozen=True)
class SmallBundle:
    """``copies`` copies of the most efficient small item."""

    item: Item
    copies: int


Provenance = Union[Leaf, Pair, SmallBundle]


@dataclass(frozen=True, eq=False)
class GluedItem:
    """
    An item of the glued instance.

    Attributes:
        profit: Total profit of the represented base items
        size: Total size of the represented base items (at most 1)
        level: Profit level k (kappa + 1 for a_eff^c)
        provenance: How the item was formed
    """

    profit: Fraction
    size: Fraction
    level: int
    provenance: Provenance

    @classmethod
    def leaf(cls, item: Item, level: int) -> "GluedItem":
        return cls(profit=item.profit, size=item.size, level=level, provenance=Leaf(item))

    def __repr__(self) -> str:
        return f"GluedItem(profit={self.profit}, size={self.size}, level={self.level})"


@dataclass
class GluedLevels:
    """
    The glued item sets tilde-I_0..tilde-I_kappa plus a_eff^c.

    Attributes:
        levels: levels[k] maps gamma -> the glued item of slot (k, gamma)
        aeffc: The bundle a_eff^c, standing alone at level kappa + 1
        glue_ops: Number of pair combinations attempted
        candidates: Sizes of every candidate per slot, when recording
    """

    levels: List[Dict[int, GluedItem]]
    aeffc: Optional[GluedItem] = None
    glue_ops: int = 0
    candidates: Optional[Dict[IntervalIndex, List[Fraction]]] = None

    @property
    def kappa(self) -> int:
        return len(self.levels) - 1

    def level_items(self, k: int) -> List[GluedItem]:
        """Items of level k ordered by gamma; level kappa+1 is {a_eff^c}."""
        if k == len(self.levels):
            return [self.aeffc] if self.aeffc is not None else []
        return [self.levels[k][gamma] for gamma in sorted(self.levels[k])]

    def all_items(self) -> List[GluedItem]:
        """Every item of G (a_eff^c excluded)."""
        return [item for k in range(len(self.levels)) for item in self.level_items(k)]

    def __len__(self) -> int:
        return sum(len(level) for level in self.levels)


def glue(a: GluedItem, b: GluedItem) -> Optional[GluedItem]:
    """
    Glue two items into one.

    Args:
        a: First item
        b: Second item (may be ``a`` itself)

    Returns:
        Combined item one level above the higher input, or None if the
        combined size exceeds the capacity
    """
    size = a.size + b.size
    if size > 1:
        return None
    return GluedItem(
        profit=a.profit + b.profit,
        size=size,
        level=max(a.level, b.level) + 1,
        provenance=Pair(a, b),
    )


def build_glued_sets(
    reduced: ReducedLargeSet,
    params: EpsParams,
    record_candidates: bool = False,
) -> GluedLevels:
    """
    Build tilde-I_0..tilde-I_kappa by iterated pairwise gluing.

    Every slot starts with its reduced item as incumbent. For k from 0 to
    kappa - 1 each pair (gamma <= gamma') of level-k items is glued, and
    the result replaces the incumbent of its level-(k+1) slot only when
    strictly smaller.

    Args:
        reduced: Reduced large set for the same params
        params: Interval geometry
        record_candidates: Keep every candidate size per slot (tests)

    Returns:
        GluedLevels without a_eff^c (see build_aeffc)
    """
    kappa = params.kappa
    levels: List[Dict[int, GluedItem]] = [dict() for _ in range(kappa + 1)]
    candidates: Optional[Dict[IntervalIndex, List[Fraction]]] = {} if record_candidates else None

    for key, item in reduced.slots.items():
        levels[key.k][key.gamma] = GluedItem.leaf(item, key.k)
        if candidates is not None:
            candidates.setdefault(key, []).append(item.size)

    glue_ops = 0
    for k in range(kappa):
        current = sorted(levels[k].items())
        upper = levels[k + 1]
        for position, (_, a) in enumerate(current):
            for _, b in current[position:]:
                glue_ops += 1
                combined = glue(a, b)
                if combined is None:
                    continue
                key = interval_index(combined.profit, params)
                if candidates is not None:
                    candidates.setdefault(key, []).append(combined.size)
                incumbent = upper.get(key.gamma)
                if incumbent is None or combined.size < incumbent.size:
                    upper[key.gamma] = combined
        logger.debug(f"Level {k + 1}: {len(upper)} glued items")

    glued = GluedLevels(levels=levels, glue_ops=glue_ops, candidates=candidates)
    logger.info(f"Built glued set G with {len(glued)} items ({glue_ops} glue operations)")
    return glued


def build_aeffc(a_eff: Item, params: EpsParams) -> Optional[GluedItem]:
    """
    Glue the fewest copies of a_eff whose profit reaches p0 / 4.

    Args:
        a_eff: Most efficient small item (profit < T)
        params: Interval geometry

    Returns:
        The bundle at level kappa + 1, or None if the copies do not fit
    """
    copies = ceil_div(params.p0 / 4, a_eff.profit)
    size = a_eff.size * copies
    if size > 1:
        logger.debug(f"a_eff^c needs {copies} copies of size {size}: does not fit")
        return None
    return GluedItem(
        profit=a_eff.profit * copies,
        size=size,
        level=params.kappa + 1,
        provenance=SmallBundle(a_eff, copies),
    )


def _expand(item: GluedItem, factor: int, counts: Dict[int, Tuple[Item, int]]) -> None:
    provenance = item.provenance
    if isinstance(provenance, Leaf):
        base = provenance.item
        _, current = counts.get(base.index, (base, 0))
        counts[base.index] = (base, current + factor)
    elif isinstance(provenance, SmallBundle):
        base = provenance.item
        _, current = counts.get(base.index, (base, 0))
        counts[base.index] = (base, current + factor * provenance.copies)
    elif provenance.left is provenance.right:
        _expand(provenance.left, 2 * factor, counts)
    else:
        _expand(provenance.left, factor, counts)
        _expand(provenance.right, factor, counts)


def unglue(item: GluedItem) -> SolutionMultiset:
    """
    Expand a glued item back into base item copies.

    Args:
        item: Item built by this module

    Returns:
        Multiset whose totals equal the item's profit and size exactly
    """
    counts: Dict[int, Tuple[Item, int]] = {}
    _expand(item, 1, counts)
    return SolutionMultiset.from_counts(
        {index: count for index, (_, count) in counts.items()},
        {index: base for index, (base, _) in counts.items()},
    )
