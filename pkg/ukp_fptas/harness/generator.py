"""
Seeded random instance generation.

Instances are drawn with numpy's PCG64 generator
(``numpy.random.default_rng(seed)``), so a fixed
(n, denominator, seed, profile) always yields the same instance.
Sizes are u / D with u in 1..D.
"""

import logging
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from ..exceptions import InvalidParameterError
from ..model import Instance


logger = logging.getLogger(__name__)

PROFILES = ("uniform", "correlated", "small-heavy")

SMALL_SHARE = 0.8
SMALL_PROFIT_CAP = Fraction(1, 16)


def _uniform_profit(rng: np.random.Generator, denominator: int) -> Fraction:
    return Fraction(int(rng.integers(1, denominator + 1)), denominator)


def generate_instance(n: int, denominator: int, seed: int, profile: str = "uniform") -> Instance:
    """
    Generate a reproducible instance.

    Profiles:
        uniform: profit uniform on {1/D, ..., D/D}
        correlated: profit = size * (1 + delta), delta in {-1/10, ..., 1/10}
            in steps of 1/100, clipped to 1
        small-heavy: about 80% of the items get a profit of at most 1/16,
            below the threshold band T = eps p0 / 2 for typical p0

    Args:
        n: Number of items (>= 1)
        denominator: Size grid D (>= 2)
        seed: PRNG seed
        profile: One of PROFILES

    Returns:
        Normalized instance (capacity 1, nothing dropped)

    Raises:
        InvalidParameterError: On invalid arguments
    """
    if n < 1:
        raise InvalidParameterError(f"n must be at least 1, got {n}")
    if denominator < 2:
        raise InvalidParameterError(f"denominator must be at least 2, got {denominator}")
    if profile not in PROFILES:
        raise InvalidParameterError(f"unknown profile {profile!r}, expected one of {PROFILES}")

    rng = np.random.default_rng(seed)
    pairs: List[Tuple[Fraction, Fraction]] = []
    for _ in range(n):
        size = Fraction(int(rng.integers(1, denominator + 1)), denominator)
        if profile == "uniform":
            profit = _uniform_profit(rng, denominator)
        elif profile == "correlated":
            delta = Fraction(int(rng.integers(-10, 11)), 100)
            profit = min(size * (1 + delta), Fraction(1))
        elif rng.random() < SMALL_SHARE:
            profit = Fraction(int(rng.integers(1, denominator + 1)), denominator) * SMALL_PROFIT_CAP
        else:
            profit = _uniform_profit(rng, denominator)
        pairs.append((profit, size))

    logger.debug(f"Generated {profile} instance n={n}, D={denominator}, seed={seed}")
    return Instance.from_pairs(pairs)
