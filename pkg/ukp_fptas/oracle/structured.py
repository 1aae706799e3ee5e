"""
Brute-force references for structured solutions.

These enumerate the solution classes the approximation argument works
with: solutions using at most one item per glued level, the
lower-bounded variant that the DP targets, and the exact (unrounded)
tuple sets F^k.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..config import config
from ..exceptions import OracleBudgetError
from ..gluing import GluedItem, GluedLevels
from ..preprocess import ReducedLargeSet
from ..utils import pareto_filter


logger = logging.getLogger(__name__)

Point = Tuple[Fraction, Fraction]


def _check_budget(what: str, choices: Sequence[int], budget: Optional[int]) -> None:
    budget = config.structured_enum_budget if budget is None else budget
    space = 1
    for count in choices:
        space *= count
    if space > budget:
        raise OracleBudgetError(what, space, budget)


def structured_enum(
    glued: GluedLevels,
    a_eff_c: Optional[GluedItem],
    v: Fraction,
    budget: Optional[int] = None,
) -> Fraction:
    """
    Optimum over structured solutions with a lower bound.

    A selection takes at most one item per level 0..kappa, a_eff^c at
    most once, and at least one item of levels kappa-2..kappa or a_eff^c.

    Args:
        glued: Glued levels
        a_eff_c: The bundle item (or None)
        v: Volume bound
        budget: Maximum number of selections (defaults to STRUCTURED_ENUM_BUDGET)

    Returns:
        Best profit of size at most v, or 0 if no selection qualifies
    """
    kappa = glued.kappa
    groups: List[List[GluedItem]] = [glued.level_items(k) for k in range(kappa + 1)]
    groups.append([a_eff_c] if a_eff_c is not None else [])
    _check_budget("structured enumeration", [len(group) + 1 for group in groups], budget)
    anchor_levels = set(range(max(kappa - 2, 0), kappa + 2))

    best = Fraction(0)

    def search(level: int, profit: Fraction, size: Fraction, anchored: bool) -> None:
        nonlocal best
        if level == len(groups):
            if anchored and profit > best:
                best = profit
            return
        search(level + 1, profit, size, anchored)
        for item in groups[level]:
            if size + item.size <= v:
                search(level + 1, profit + item.profit, size + item.size, anchored or level in anchor_levels)

    search(0, Fraction(0), Fraction(0), False)
    return best


def _unbounded_best(
    pool: Sequence[GluedItem],
    capacity: Fraction,
    memo: Dict[Tuple[int, Fraction], Fraction],
) -> Fraction:
    def search(position: int, remaining: Fraction) -> Fraction:
        if position == len(pool):
            return Fraction(0)
        key = (position, remaining)
        if key in memo:
            return memo[key]
        item = pool[position]
        value = Fraction(0)
        copies = 0
        while copies * item.size <= remaining:
            value = max(value, copies * item.profit + search(position + 1, remaining - copies * item.size))
            copies += 1
        memo[key] = value
        return value

    return search(0, capacity)


def structured_opt(
    glued: GluedLevels,
    reduced: ReducedLargeSet,
    k0: int,
    v: Fraction,
    budget: Optional[int] = None,
) -> Fraction:
    """
    Optimum of solutions structured for k = k0.

    The item pool is tilde-I_0..tilde-I_{k0+1} together with the reduced
    sets I_{k0+2}..I_kappa; at most one item is used from each of the
    levels 0..k0, the remaining levels allow any number of copies.

    Args:
        glued: Glued levels built from ``reduced``
        reduced: Reduced large set
        k0: Structured depth in 0..kappa-1
        v: Volume bound
        budget: Maximum number of structured selections

    Returns:
        Best profit of size at most v
    """
    kappa = glued.kappa
    groups = [glued.level_items(k) for k in range(k0 + 1)]
    _check_budget("structured optimum", [len(group) + 1 for group in groups], budget)

    pool: List[GluedItem] = list(glued.level_items(k0 + 1))
    for k in range(k0 + 2, kappa + 1):
        pool.extend(GluedItem.leaf(item, k) for _, item in sorted(reduced.level(k).items()))
    memo: Dict[Tuple[int, Fraction], Fraction] = {}

    best = Fraction(0)

    def search(level: int, profit: Fraction, size: Fraction) -> None:
        nonlocal best
        if level == len(groups):
            best = max(best, profit + _unbounded_best(pool, v - size, memo))
            return
        search(level + 1, profit, size)
        for item in groups[level]:
            if size + item.size <= v:
                search(level + 1, profit + item.profit, size + item.size)

    search(0, Fraction(0), Fraction(0))
    return best


def exact_structured_tuples(glued: GluedLevels, a_eff_c: Optional[GluedItem]) -> Dict[int, List[Point]]:
    """
    The exact tuple sets F^kappa+1..F^0 without profit rounding.

    Dominated tuples are removed from every level before the next one
    is built. The origin (0, 0) is extended only for levels
    k >= kappa - 2.

    Args:
        glued: Glued levels
        a_eff_c: The bundle item forming level kappa + 1 (or None)

    Returns:
        Level -> non-dominated (profit, size) pairs, origin included
    """
    kappa = glued.kappa
    origin = (Fraction(0), Fraction(0))
    above: List[Point] = [origin]
    tuples: Dict[int, List[Point]] = {kappa + 2: above}
    for k in range(kappa + 1, -1, -1):
        items = [a_eff_c] if k == kappa + 1 and a_eff_c is not None else (
            glued.level_items(k) if k <= kappa else []
        )
        found = set(above)
        for profit, size in above:
            if (profit, size) == origin and k <= kappa - 3:
                continue
            for item in items:
                if size + item.size <= 1:
                    found.add((profit + item.profit, size + item.size))
        above = pareto_filter(found)
        tuples[k] = above
    logger.debug(f"Exact tuple sets built, |F^0| = {len(tuples[0])}")
    return tuples
