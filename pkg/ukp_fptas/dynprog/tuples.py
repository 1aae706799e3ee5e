"""
Approximate dynamic program over structured tuples.

Tuples (p, s, k) stand for structured item sets with a lower bound that
use items of levels k..kappa+1 only. Level by level, from kappa + 1 down
to 0, every tuple is carried down and extended by each glued item of the
level. Tuple profits are rounded into buckets of width 2^(kappa-2) K
over [p0/4, 2 p0]; each bucket keeps its smallest-size tuple, and
dominated tuples are swept out once per level.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Union

from ..gluing import GluedItem, GluedLevels
from ..model import EpsParams, xi_index


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Origin:
    """The empty item set (0, 0)."""


@dataclass(frozen=True)
class Extend:
    """Parent tuple of the level above plus one item of this level."""

    parent: "TupleEntry"
    item: GluedItem


@dataclass(frozen=True)
class Single:
    """A lone item of a level k >= kappa - 2."""

    item: GluedItem


Back = Union[Origin, Extend, Single]

ORIGIN = Origin()


@dataclass(frozen=True, eq=False)
class TupleEntry:
    """
    One DP tuple with its backtracking reference.

    Attributes:
        profit: Total profit of the represented set
        size: Total size (at most 1)
        level: Level at which the tuple was created (carried copies keep it)
        back: How the tuple was formed
    """

    profit: Fraction
    size: Fraction
    level: int
    back: Back

    @property
    def is_origin(self) -> bool:
        return isinstance(self.back, Origin)

    def __repr__(self) -> str:
        return f"TupleEntry(profit={self.profit}, size={self.size}, level={self.level})"


@dataclass
class TupleLevel:
    """
    The tuple set D^(k): one optional entry per profit bucket.

    Attributes:
        k: Level index
        buckets: Entry per bucket xi in 0..xi0+1 (None when empty)
        origin: The (0, 0) tuple, present at every level
        removed: Dominated entries removed from this level
    """

    k: int
    buckets: List[Optional[TupleEntry]]
    origin: TupleEntry
    removed: int = 0

    @classmethod
    def from_entries(
        cls,
        k: int,
        entries: Iterable[TupleEntry],
        params: EpsParams,
        origin: TupleEntry,
    ) -> "TupleLevel":
        """Place entries into their buckets (later entries win only if smaller)."""
        buckets: List[Optional[TupleEntry]] = [None] * params.bucket_count
        for entry in entries:
            xi = xi_index(entry.profit, params)
            incumbent = buckets[xi]
            if incumbent is None or entry.size < incumbent.size:
                buckets[xi] = entry
        return cls(k=k, buckets=buckets, origin=origin)

    def entries(self, include_origin: bool = False) -> List[TupleEntry]:
        """Present entries in increasing profit order."""
        found = [entry for entry in self.buckets if entry is not None]
        return [self.origin] + found if include_origin else found

    def __len__(self) -> int:
        """Number of tuples including the origin."""
        return 1 + sum(entry is not None for entry in self.buckets)


@dataclass
class DpResult:
    """
    Every level D^(kappa+2)..D^(0) and the counters of one DP run.

    The levels retain all surviving entries, so the backtracking chains
    of D^(0) stay valid for as long as the result is alive.
    """

    levels: Dict[int, TupleLevel]
    origin: TupleEntry
    tuples_created: int = 0
    dominance_removals: int = 0

    @property
    def final(self) -> TupleLevel:
        """D^(0)."""
        return self.levels[0]

    @property
    def max_level_tuples(self) -> int:
        return max(len(level) for level in self.levels.values())


def remove_dominated(level: TupleLevel) -> TupleLevel:
    """
    Remove dominated tuples in one right-to-left sweep.

    Buckets are ordered by profit, so an entry survives iff its size is
    strictly smaller than the size of every kept entry to its right.

    Args:
        level: Level with bucket-sorted entries

    Returns:
        New level whose entries strictly increase in both profit and size
    """
    buckets: List[Optional[TupleEntry]] = list(level.buckets)
    removed = 0
    min_size: Optional[Fraction] = None
    for xi in range(len(buckets) - 1, -1, -1):
        entry = buckets[xi]
        if entry is None:
            continue
        if min_size is None or entry.size < min_size:
            min_size = entry.size
        else:
            buckets[xi] = None
            removed += 1
    return TupleLevel(k=level.k, buckets=buckets, origin=level.origin, removed=level.removed + removed)


def _offer(
    buckets: List[Optional[TupleEntry]],
    profit: Fraction,
    size: Fraction,
    k: int,
    back: Back,
    params: EpsParams,
) -> None:
    xi = xi_index(profit, params)
    incumbent = buckets[xi]
    if incumbent is None or size < incumbent.size:
        buckets[xi] = TupleEntry(profit=profit, size=size, level=k, back=back)


def run_dp(glued: GluedLevels, params: EpsParams) -> DpResult:
    """
    Run the approximate dynamic program from level kappa + 1 down to 0.

    Args:
        glued: Glued sets for the same params; a_eff^c is level kappa + 1
        params: Interval geometry

    Returns:
        DpResult holding D^(0) and every intermediate level
    """
    kappa = params.kappa
    origin = TupleEntry(profit=Fraction(0), size=Fraction(0), level=kappa + 2, back=ORIGIN)
    above = TupleLevel(k=kappa + 2, buckets=[None] * params.bucket_count, origin=origin)
    result = DpResult(levels={kappa + 2: above}, origin=origin)

    for k in range(kappa + 1, -1, -1):
        buckets = list(above.buckets)
        parents = above.entries()
        for item in glued.level_items(k):
            for parent in parents:
                size = parent.size + item.size
                if size > 1:
                    continue
                result.tuples_created += 1
                _offer(buckets, parent.profit + item.profit, size, k, Extend(parent, item), params)
            if k >= kappa - 2:
                result.tuples_created += 1
                _offer(buckets, item.profit, item.size, k, Single(item), params)

        level = remove_dominated(TupleLevel(k=k, buckets=buckets, origin=origin))
        result.dominance_removals += level.removed
        result.levels[k] = level
        logger.debug(f"D^({k}): {len(level)} tuples, {level.removed} dominated removed")
        above = level

    logger.info(
        f"Approximate DP done: {len(result.final)} tuples in D^(0), "
        f"{result.tuples_created} created, {result.dominance_removals} dominated removed"
    )
    return result
