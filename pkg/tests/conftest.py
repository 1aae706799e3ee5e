"""Shared fixtures: the three-item reference instance and its pipeline state."""

from fractions import Fraction as F

import pytest

from ukp_fptas.dynprog import run_dp
from ukp_fptas.gluing import build_aeffc, build_glued_sets
from ukp_fptas.model import Instance, normalize_epsilon
from ukp_fptas.preprocess import greedy_p0, partition_items, reduce_large


STAR_TEXT = "c 1\nitem 1/2 2/5\nitem 3/10 7/20\nitem 3/50 1/20\n"


@pytest.fixture
def star():
    """a1 = (1/2, 2/5), a2 = (3/10, 7/20), a3 = (3/50, 1/20); OPT = 31/25."""
    return Instance.from_pairs([(F(1, 2), F(2, 5)), (F(3, 10), F(7, 20)), (F(3, 50), F(1, 20))])


@pytest.fixture
def star_text():
    return STAR_TEXT


@pytest.fixture
def star_file(tmp_path):
    path = tmp_path / "star.txt"
    path.write_text(STAR_TEXT, encoding="utf-8")
    return path


@pytest.fixture
def star_params(star):
    _, _, p0 = greedy_p0(star)
    return normalize_epsilon(F(1, 4), p0)


@pytest.fixture
def star_partition(star, star_params):
    return partition_items(star, star_params)


@pytest.fixture
def star_reduced(star_partition, star_params):
    return reduce_large(star_partition.large, star_params)


@pytest.fixture
def star_glued(star_reduced, star_partition, star_params):
    glued = build_glued_sets(star_reduced, star_params)
    glued.aeffc = build_aeffc(star_partition.small_best, star_params)
    return glued


@pytest.fixture
def star_dp(star_glued, star_params):
    return run_dp(star_glued, star_params)


@pytest.fixture
def params_quarter():
    """eps = 1/4 with p0 = 1: T = 1/8, K = 1/512."""
    return normalize_epsilon(F(1, 4), F(1))
