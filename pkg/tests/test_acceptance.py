"""
End-to-end acceptance checks against exact oracles.

The full-size suites are marked slow; each has a reduced variant that
runs by default.
"""

from fractions import Fraction as F

import numpy as np
import pytest

from ukp_fptas.dynprog import run_dp
from ukp_fptas.gluing import build_aeffc, build_glued_sets, unglue
from ukp_fptas.harness import BenchRunner, calibrate_complexity, generate_instance
from ukp_fptas.model import Instance, normalize_epsilon
from ukp_fptas.oracle import GridInstance, brute_force, exact_dp, exact_structured_tuples, structured_enum
from ukp_fptas.preprocess import greedy_p0, partition_items, reduce_large
from ukp_fptas.solver import Branch, backtrack_solution, solve, verify_certificate


PROFILES = ("uniform", "correlated", "small-heavy")
EPSILONS = (F(1, 4), F(1, 8), F(1, 16))


def opt_of(instance, denominator, capacity=F(1)):
    grid = GridInstance.from_items(instance, denominator)
    opt, _ = exact_dp(grid, capacity_units=grid.units_of(capacity))
    return opt


def large_micro_instance(seed, denominator=16, n=5):
    """Sizes >= 1/4 and profits >= 1/2 keep p0 <= 4, so every item is large."""
    rng = np.random.default_rng(seed)
    pairs = []
    for _ in range(n):
        size = F(int(rng.integers(denominator // 4, denominator + 1)), denominator)
        profit = F(int(rng.integers(denominator // 2, denominator + 1)), denominator)
        pairs.append((profit, size))
    return Instance.from_pairs(pairs)


def pipeline(instance, eps):
    _, _, p0 = greedy_p0(instance)
    params = normalize_epsilon(eps, p0)
    partition = partition_items(instance, params)
    reduced = reduce_large([item for item in partition.large if item.profit < 2 * p0], params)
    glued = build_glued_sets(reduced, params)
    if partition.small_best is not None:
        glued.aeffc = build_aeffc(partition.small_best, params)
    return params, partition, reduced, glued


def check_guarantee_and_greedy(count, n, denominator):
    for profile in PROFILES:
        for seed in range(count):
            instance = generate_instance(n, denominator, seed, profile)
            opt = opt_of(instance, denominator)
            _, _, p0 = greedy_p0(instance)
            assert 2 * p0 >= opt
            for eps in EPSILONS:
                result = solve(instance, eps)
                assert result.profit >= (1 - eps) * opt, (profile, seed, eps)


def test_guarantee_and_greedy_bound():
    check_guarantee_and_greedy(count=8, n=20, denominator=32)


@pytest.mark.slow
def test_guarantee_and_greedy_bound_full():
    check_guarantee_and_greedy(count=200, n=40, denominator=64)


def clustered_large_instance(seed, n=6):
    """Large items whose profits crowd around two centers, closer than one sub-interval width."""
    rng = np.random.default_rng(seed)
    centers = [F(int(c), 16) for c in rng.integers(8, 16, size=2)]
    pairs = []
    for _ in range(n):
        centre = centers[int(rng.integers(len(centers)))]
        profit = centre + F(int(rng.integers(0, 8)), 4096)
        size = F(int(rng.integers(4, 17)), 16)
        pairs.append((profit, size))
    return Instance.from_pairs(pairs)


def merges_distinct_profits(partition, reduced):
    kept = {item.profit for item in reduced.items()}
    return any(item.profit not in kept for item in partition.large)


@pytest.mark.parametrize("seed", range(50))
def test_reduction_quality(seed):
    instance = clustered_large_instance(seed)
    params, partition, reduced, _ = pipeline(instance, F(1, 4))
    factor = 1 - params.delta
    for v in (F(1, 4), F(1, 2), F(3, 4), F(1)):
        full = opt_of(partition.large, 16, v)
        kept = opt_of(reduced.items(), 16, v)
        assert kept >= factor * full


def test_reduction_merges_distinct_profits():
    merged = 0
    for seed in range(50):
        _, partition, reduced, _ = pipeline(clustered_large_instance(seed), F(1, 4))
        merged += merges_distinct_profits(partition, reduced)
    assert merged >= 10


@pytest.mark.parametrize("seed", range(30))
def test_structured_quality(seed):
    instance = large_micro_instance(seed)
    params, _, reduced, glued = pipeline(instance, F(1, 4))
    assert params.kappa == 3
    reduced_opt = opt_of(reduced.items(), 16)
    assert structured_enum(glued, None, F(1)) >= params.quality(params.kappa) * reduced_opt


@pytest.mark.parametrize("seed", range(30))
def test_tuple_approximation(seed):
    instance = generate_instance(6, 16, seed, "correlated")
    params, _, _, glued = pipeline(instance, F(1, 4))
    dp = run_dp(glued, params)
    exact = exact_structured_tuples(glued, glued.aeffc)
    kappa = params.kappa
    for k in range(kappa + 1, -1, -1):
        factor = params.quality(kappa - k + 1)
        entries = dp.levels[k].entries()
        for profit, size in exact[k]:
            if profit == 0:
                continue
            assert any(e.size <= size and e.profit >= factor * profit for e in entries), (k, profit, size)


@pytest.mark.parametrize("seed", range(20))
def test_final_level_covers_structured_optimum(seed):
    base = large_micro_instance(seed)
    instance = Instance.from_pairs([(item.profit, item.size) for item in base.items] + [(F(1, 64), F(1, 64))])
    params, _, _, glued = pipeline(instance, F(1, 4))
    assert glued.aeffc is not None
    entries = run_dp(glued, params).final.entries()
    factor = params.quality(params.kappa + 1)
    previous = F(0)
    for j in range(1, 17):
        v = F(j, 16)
        structured = structured_enum(glued, glued.aeffc, v)
        assert structured >= previous
        previous = structured
        best = max((entry.profit for entry in entries if entry.size <= v), default=F(0))
        assert best >= factor * structured, (v, best, structured)


@pytest.mark.parametrize("profile", PROFILES)
def test_size_bounds(profile):
    for seed in range(10):
        instance = generate_instance(40, 64, seed, profile)
        params, _, reduced, glued = pipeline(instance, F(1, 8))
        assert reduced.count <= params.max_reduced_slots
        dp = run_dp(glued, params)
        for level in dp.levels.values():
            assert len(level.entries()) <= params.bucket_count


def test_complexity_counters():
    records = BenchRunner([F(1, 4), F(1, 8)], profile="correlated").run([(120, 32)], [0])
    report = calibrate_complexity(records)
    assert report['within_bound'].all()


@pytest.mark.slow
def test_complexity_counters_full():
    """eps halved from 1/4 down to 1/128 at n = 1000; counters only, the oracle is disabled."""
    eps_list = [F(1, 2 ** j) for j in range(2, 8)]
    records = BenchRunner(eps_list, profile="correlated", oracle_budget=0).run([(1000, 64)], [0])
    report = calibrate_complexity(records)
    assert len(report) == len(eps_list)
    assert report['within_bound'].all()


def test_golden_instance(star):
    result = solve(star, F(1, 4))
    assert result.profit == F(31, 25) == opt_of(star, 20)
    assert result.mode is Branch.DP_COMBINED
    assert result.solution.total_profit == F(31, 25)


def check_oracle_differential(count):
    rng = np.random.default_rng(2024)
    for _ in range(count):
        n = int(rng.integers(1, 5))
        denominator = int(rng.integers(2, 11))
        pairs = [
            (F(int(rng.integers(1, 11)), 10), F(int(rng.integers(1, denominator + 1)), denominator))
            for _ in range(n)
        ]
        instance = Instance.from_pairs(pairs)
        assert opt_of(instance, denominator) == brute_force(instance, denominator)


def test_oracle_differential():
    check_oracle_differential(100)


@pytest.mark.slow
def test_oracle_differential_full():
    check_oracle_differential(500)


@pytest.mark.parametrize("seed", range(20))
def test_gluing_never_creates_profit(seed):
    instance = generate_instance(8, 16, seed, "correlated")
    opt = opt_of(instance, 16)
    params, _, _, glued = pipeline(instance, F(1, 4))
    for item in glued.level_items(params.kappa + 1) + glued.all_items():
        solution = unglue(item)
        verify_certificate(instance, solution)
        assert solution.total_profit == item.profit <= opt
    dp = run_dp(glued, params)
    for entry in dp.final.entries():
        solution = backtrack_solution(entry, dp)
        verify_certificate(instance, solution)
        assert entry.profit <= opt
