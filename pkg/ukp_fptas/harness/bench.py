"""
Benchmark engine.

Solves a grid of generated instances for several accuracies, compares
against the exact oracle where its budget allows, and records the
operation counters. Records are collected into a pandas DataFrame with
a fixed column order and can be written as CSV.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from ..config import config
from ..exceptions import InvalidParameterError, OracleBudgetError
from ..model import normalize_epsilon
from ..oracle import GridInstance, exact_dp
from ..solver import solve
from ..utils import format_rational
from .generator import generate_instance


logger = logging.getLogger(__name__)

CSV_COLUMNS = [
    'id', 'n', 'D', 'eps', 'profit', 'opt', 'ratio', 'wall_ns',
    'tuples', 'glue_ops', 'slots', 'dominance_removals',
]

# (instance id, n, D, seed, profile, eps, oracle budget)
Job = Tuple[str, int, int, int, str, Fraction, int]


@dataclass
class BenchRecord:
    """One (instance, eps) measurement."""

    id: str
    n: int
    D: int
    eps: Fraction
    profit: Fraction
    opt: Optional[Fraction]
    ratio: Optional[float]
    wall_ns: int
    tuples: int
    glue_ops: int
    slots: int
    dominance_removals: int

    def as_row(self) -> dict:
        row = asdict(self)
        row['eps'] = format_rational(self.eps)
        row['profit'] = format_rational(self.profit)
        row['opt'] = format_rational(self.opt) if self.opt is not None else ''
        row['ratio'] = self.ratio if self.ratio is not None else ''
        return row


def run_job(job: Job) -> BenchRecord:
    """Solve one generated instance for one eps (top level so it pickles)."""
    instance_id, n, denominator, seed, profile, eps, budget = job
    instance = generate_instance(n, denominator, seed, profile)

    started = time.perf_counter_ns()
    result = solve(instance, eps)
    wall_ns = time.perf_counter_ns() - started

    opt = None
    try:
        opt, _ = exact_dp(GridInstance.from_items(instance, denominator), budget=budget)
    except OracleBudgetError as e:
        logger.debug(f"{instance_id}: oracle skipped ({e})")

    stats = result.stats
    return BenchRecord(
        id=instance_id,
        n=n,
        D=denominator,
        eps=eps,
        profit=result.profit,
        opt=opt,
        ratio=float(result.profit / opt) if opt else None,
        wall_ns=wall_ns,
        tuples=stats.tuples_created,
        glue_ops=stats.glue_ops,
        slots=stats.reduction_slots,
        dominance_removals=stats.dominance_removals,
    )


class BenchRunner:
    """
    Runs benchmark grids and keeps the records.

    Records are always ordered by (instance id, eps) regardless of the
    order in which parallel workers finish.
    """

    def __init__(
        self,
        eps_list: Sequence[Fraction],
        profile: str = "uniform",
        oracle_budget: Optional[int] = None,
        workers: Optional[int] = None,
    ):
        """
        Initialize the runner.

        Args:
            eps_list: Accuracies to run every instance with
            profile: Generator profile
            oracle_budget: Exact DP cell budget (defaults to ORACLE_DP_BUDGET)
            workers: Worker processes (defaults to BENCH_WORKERS)
        """
        if not eps_list:
            raise InvalidParameterError("eps list is empty")
        for eps in eps_list:
            if not 0 < eps < 1:
                raise InvalidParameterError(f"epsilon must lie in (0, 1), got {eps}")
        self.eps_list = [Fraction(eps) for eps in eps_list]
        self.profile = profile
        self.oracle_budget = config.oracle_dp_budget if oracle_budget is None else oracle_budget
        self.workers = config.bench_workers if workers is None else workers
        self.records: List[BenchRecord] = []

        logger.info(
            f"BenchRunner initialized with eps={[format_rational(e) for e in self.eps_list]}, "
            f"profile={profile}, workers={self.workers}"
        )

    def jobs(self, sizes: Iterable[Tuple[int, int]], seeds: Iterable[int]) -> List[Job]:
        """Cross product of sizes (n, D), seeds and accuracies."""
        jobs = []
        for n, denominator in sizes:
            for seed in seeds:
                instance_id = f"{self.profile}-n{n}-D{denominator}-s{seed}"
                for eps in self.eps_list:
                    jobs.append((instance_id, n, denominator, seed, self.profile, eps, self.oracle_budget))
        return jobs

    def run(self, sizes: Iterable[Tuple[int, int]], seeds: Iterable[int]) -> List[BenchRecord]:
        """
        Run the benchmark grid.

        Args:
            sizes: (n, D) pairs
            seeds: Generator seeds

        Returns:
            Records of this run in (id, eps) order
        """
        jobs = self.jobs(list(sizes), list(seeds))
        logger.info(f"Running {len(jobs)} benchmark jobs")

        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                records = list(pool.map(run_job, jobs))
        else:
            records = [run_job(job) for job in jobs]

        records.sort(key=lambda record: (record.id, record.eps))
        self.records.extend(records)
        logger.info("Benchmark completed")
        return records

    def get_records_frame(self) -> pd.DataFrame:
        """All records as a DataFrame with the fixed CSV columns."""
        return records_to_frame(self.records)

    def reset(self) -> None:
        """Forget collected records."""
        logger.info("Resetting bench runner")
        self.records = []


def records_to_frame(records: Iterable[BenchRecord]) -> pd.DataFrame:
    """Records as a DataFrame in CSV column order."""
    return pd.DataFrame([record.as_row() for record in records], columns=CSV_COLUMNS)


def write_csv(records: Iterable[BenchRecord], path: str) -> None:
    """
    Write records as CSV.

    Raises:
        OSError: If the path cannot be written
    """
    records_to_frame(records).to_csv(path, index=False)
    logger.info(f"Wrote benchmark CSV to {path}")


def complexity_factor(eps: Fraction) -> float:
    """(1/eps^2) (log2(2/eps) + 1)^3 for a normalized eps."""
    eps = float(eps)
    return (1.0 / eps ** 2) * (np.log2(2.0 / eps) + 1.0) ** 3


def calibrate_complexity(records: Iterable[BenchRecord], reference_eps: Fraction = Fraction(1, 4)) -> pd.DataFrame:
    """
    Check tuple counters against C (1/eps^2) (log2(2/eps) + 1)^3.

    C is calibrated per instance from its record at ``reference_eps``.
    The eps of a record is normalized to a power of two first, so the
    factor matches the accuracy the solver actually used.

    Args:
        records: Bench records covering ``reference_eps``
        reference_eps: Accuracy the constant is calibrated at

    Returns:
        DataFrame with columns id, eps, tuples, C, bound, within_bound

    Raises:
        InvalidParameterError: If an instance has no record at ``reference_eps``
    """
    frame = pd.DataFrame(
        [
            {
                'id': record.id,
                'eps': normalize_epsilon(record.eps, Fraction(1)).eps,
                'tuples': record.tuples,
            }
            for record in records
        ]
    )
    if frame.empty:
        return frame.assign(C=[], bound=[], within_bound=[])

    frame['factor'] = frame['eps'].map(complexity_factor)
    reference = normalize_epsilon(reference_eps, Fraction(1)).eps
    calibration = (
        frame[frame['eps'] == reference]
        .assign(C=lambda f: f['tuples'] / f['factor'])
        .set_index('id')['C']
    )
    missing = sorted(set(frame['id']) - set(calibration.index))
    if missing:
        raise InvalidParameterError(
            f"calibration needs a record at eps={format_rational(reference)} for instances {missing}"
        )
    frame['C'] = frame['id'].map(calibration)
    frame['bound'] = frame['C'] * frame['factor']
    # float slack so the calibration rows themselves compare equal
    frame['within_bound'] = frame['tuples'] <= frame['bound'] * (1 + 1e-9)
    return frame.drop(columns=['factor'])
