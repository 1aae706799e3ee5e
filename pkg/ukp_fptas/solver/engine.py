"""
The complete approximation pipeline.

Determines P0 and the interval geometry, handles the two special
branches, runs the approximate DP, completes the best tuple with copies
of the most efficient small item, and expands the choice into a
certificate over the original items.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from ..config import config
from ..dynprog import DpResult, Extend, Origin, Single, TupleEntry, run_dp
from ..exceptions import InvariantViolation
from ..gluing import GluedLevels, build_aeffc, build_glued_sets, unglue
from ..model import EpsParams, Instance, Item, SolutionMultiset, normalize_epsilon, xi_index
from ..preprocess import Partition, greedy_p0, partition_items, reduce_large
from ..utils import parse_rational


logger = logging.getLogger(__name__)


class Branch(Enum):
    """Which part of the pipeline produced the returned solution."""
    TWO_P0_ITEM = "two-p0-item"
    TWO_GLUED_COPIES = "two-glued-copies"
    DP_COMBINED = "dp-combined"
    GREEDY_FALLBACK = "greedy-fallback"


@dataclass
class SolverStats:
    """Operation counters of one solve."""

    tuples_created: int = 0
    glue_ops: int = 0
    reduction_slots: int = 0
    dominance_removals: int = 0
    max_level_tuples: int = 0
    glued_items: int = 0

    def as_dict(self) -> dict:
        return {
            'tuples': self.tuples_created,
            'glue_ops': self.glue_ops,
            'slots': self.reduction_slots,
            'dominance_removals': self.dominance_removals,
            'max_level_tuples': self.max_level_tuples,
            'glued_items': self.glued_items,
        }


@dataclass(frozen=True)
class SolveResult:
    """
    Outcome of one solve.

    Attributes:
        profit: Total profit of the certificate
        solution: Certificate over original item indices
        stats: Operation counters
        mode: Branch that produced the solution
        params: Normalized parameters used
    """

    profit: Fraction
    solution: SolutionMultiset
    stats: SolverStats
    mode: Branch
    params: Optional[EpsParams] = None


def combine_with_small(entry: TupleEntry, a_eff: Optional[Item]) -> Tuple[Fraction, int]:
    """
    Fill the space left by a tuple with copies of a_eff.

    Args:
        entry: DP tuple with size at most 1
        a_eff: Most efficient small item, or None

    Returns:
        (profit, copies) with copies = floor((1 - size) / size(a_eff))
    """
    if a_eff is None:
        return entry.profit, 0
    copies = int((1 - entry.size) // a_eff.size)
    return entry.profit + copies * a_eff.profit, copies


def backtrack_solution(entry: TupleEntry, arena: DpResult) -> SolutionMultiset:
    """
    Follow a tuple's chain and unglue every item on it.

    Args:
        entry: Tuple of the final level D^(0)
        arena: DP result the tuple belongs to

    Returns:
        Multiset whose totals equal the tuple's profit and size

    Raises:
        InvariantViolation: If levels along the chain do not strictly
            increase or the chain does not end at the origin
    """
    solution = SolutionMultiset.empty()
    current = entry
    steps = 0
    while True:
        back = current.back
        if isinstance(back, Origin):
            if current is not arena.origin:
                raise InvariantViolation("backtracking chain ends at a foreign origin")
            break
        if isinstance(back, Single):
            solution = solution.merge(unglue(back.item))
            break
        if not isinstance(back, Extend):
            raise InvariantViolation(f"unknown backtracking reference {back!r}")
        if back.parent.level <= current.level:
            raise InvariantViolation(
                f"backtracking chain level {back.parent.level} does not exceed {current.level}"
            )
        solution = solution.merge(unglue(back.item))
        current = back.parent
        steps += 1

    if solution.total_profit != entry.profit or solution.total_size != entry.size:
        raise InvariantViolation(
            f"backtracked totals ({solution.total_profit}, {solution.total_size}) "
            f"differ from tuple ({entry.profit}, {entry.size})"
        )
    logger.debug(f"Backtracked tuple {entry!r} in {steps + 1} steps")
    return solution


def verify_certificate(instance: Instance, solution: SolutionMultiset) -> None:
    """
    Recompute certificate totals from the original items.

    Raises:
        InvariantViolation: On unknown indices, mismatching totals or
            a size above the capacity
    """
    items = instance.by_index()
    unknown = [index for index in solution.counts if index not in items]
    if unknown:
        raise InvariantViolation(f"certificate references unknown items {unknown}")
    profit, size = solution.recompute(items)
    if (profit, size) != (solution.total_profit, solution.total_size):
        raise InvariantViolation(
            f"certificate totals ({solution.total_profit}, {solution.total_size}) "
            f"do not match recomputed ({profit}, {size})"
        )
    if not solution.is_feasible(instance.capacity):
        raise InvariantViolation(f"certificate size {size} exceeds capacity")


class FptasSolver:
    """
    Approximation scheme for the Unbounded Knapsack Problem.

    The returned profit is at least (1 - eps) OPT for the normalized eps.
    The pipeline stages are public so tests can inject intermediate state.
    """

    def __init__(self, eps: Optional[Fraction] = None):
        """
        Initialize the solver.

        Args:
            eps: Requested accuracy in (0, 1); defaults to DEFAULT_EPS
        """
        self.eps_input = Fraction(eps) if eps is not None else parse_rational(config.default_eps)
        logger.debug(f"FptasSolver initialized with eps={self.eps_input}")

    def solve(self, instance: Instance) -> SolveResult:
        """
        Solve an instance.

        Args:
            instance: Normalized instance

        Returns:
            SolveResult with a verified certificate

        Raises:
            EmptyInstanceError: If the instance has no items
            InvalidParameterError: If eps is not in (0, 1)
        """
        instance.require_items()
        greedy_item, copies, p0 = greedy_p0(instance)
        params = normalize_epsilon(self.eps_input, p0)
        partition = partition_items(instance, params)
        greedy = SolutionMultiset.of(greedy_item, copies)
        logger.info(
            f"Solving n={len(instance)} with eps={params.eps} (kappa={params.kappa}), "
            f"p0={p0}, {len(partition.large)} large items"
        )
        return self.solve_partitioned(instance, params, partition, greedy)

    def solve_partitioned(
        self,
        instance: Instance,
        params: EpsParams,
        partition: Partition,
        greedy: SolutionMultiset,
    ) -> SolveResult:
        """Stages after partitioning: profit-2p0 check, reduction, gluing."""
        stats = SolverStats()
        if partition.two_p0_item is not None:
            solution = SolutionMultiset.of(partition.two_p0_item)
            logger.info(f"Item {partition.two_p0_item.index} attains 2 p0: returning it alone")
            return self._finish(instance, solution, stats, Branch.TWO_P0_ITEM, params)

        top = 2 * params.p0
        reduced = reduce_large([item for item in partition.large if item.profit < top], params)
        glued = build_glued_sets(reduced, params)
        if partition.small_best is not None:
            glued.aeffc = build_aeffc(partition.small_best, params)
        stats.reduction_slots = reduced.count
        return self.solve_glued(instance, params, partition, glued, greedy, stats)

    def solve_glued(
        self,
        instance: Instance,
        params: EpsParams,
        partition: Partition,
        glued: GluedLevels,
        greedy: SolutionMultiset,
        stats: Optional[SolverStats] = None,
    ) -> SolveResult:
        """Stages after gluing: two-copies check, DP, completion, fallback."""
        stats = stats or SolverStats()
        stats.glue_ops = glued.glue_ops
        stats.glued_items = len(glued)

        top = glued.levels[params.kappa].get(0)
        if top is not None and top.profit == params.p0 and 2 * top.size <= 1:
            solution = unglue(top).scaled(2)
            logger.info("Two copies of the level-kappa item reach 2 p0")
            return self._finish(instance, solution, stats, Branch.TWO_GLUED_COPIES, params)

        dp = run_dp(glued, params)
        stats.tuples_created = dp.tuples_created
        stats.dominance_removals = dp.dominance_removals
        stats.max_level_tuples = dp.max_level_tuples

        a_eff = partition.small_best
        best_entry, best_profit, best_copies = None, Fraction(-1), 0
        for entry in dp.final.entries(include_origin=True):
            profit, copies = combine_with_small(entry, a_eff)
            if profit > best_profit or (profit == best_profit and entry.size < best_entry.size):
                best_entry, best_profit, best_copies = entry, profit, copies

        if greedy.total_profit >= best_profit:
            logger.info(f"Greedy solution {greedy.total_profit} matches or beats DP value {best_profit}")
            return self._finish(instance, greedy, stats, Branch.GREEDY_FALLBACK, params)

        solution = backtrack_solution(best_entry, dp)
        if best_copies:
            solution = solution.merge(SolutionMultiset.of(a_eff, best_copies))
        if not best_entry.is_origin:
            logger.debug(f"Best tuple lies in bucket {xi_index(best_entry.profit, params)}")
        return self._finish(instance, solution, stats, Branch.DP_COMBINED, params)

    def _finish(
        self,
        instance: Instance,
        solution: SolutionMultiset,
        stats: SolverStats,
        mode: Branch,
        params: EpsParams,
    ) -> SolveResult:
        verify_certificate(instance, solution)
        logger.info(f"Solution profit {solution.total_profit} via {mode.value}")
        return SolveResult(
            profit=solution.total_profit,
            solution=solution,
            stats=stats,
            mode=mode,
            params=params,
        )


def solve(instance: Instance, eps_input: Fraction) -> SolveResult:
    """
    Solve an instance to within (1 - eps) of the optimum.

    Args:
        instance: Normalized instance
        eps_input: Requested accuracy in (0, 1)

    Returns:
        SolveResult
    """
    return FptasSolver(eps_input).solve(instance)
