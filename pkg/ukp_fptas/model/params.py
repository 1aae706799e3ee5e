"""
Accuracy parameters and the profit-interval geometry.

Epsilon is normalized to a power of two, 2^(1 - kappa), from which the
large/small threshold T, the sub-interval width K and the index bounds
are derived. Interval and bucket indices are computed by exact
comparisons and floor divisions, never by floating logarithms.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Tuple

from ..exceptions import InvalidParameterError, OutOfRangeError


logger = logging.getLogger(__name__)

EPS_CEILING = Fraction(1, 4)
MIN_KAPPA = 3


class IntervalIndex(NamedTuple):
    """Position (k, gamma) of a profit in the sub-interval grid."""

    k: int
    gamma: int


@dataclass(frozen=True)
class EpsParams:
    """
    Normalized accuracy and every constant derived from it.

    Attributes:
        eps_input: Accuracy requested by the caller
        eps: Normalized accuracy 2^(1 - kappa) <= min(eps_input, 1/4)
        kappa: log2(2 / eps), at least 3
        p0: Greedy lower bound (OPT / 2 <= p0 <= OPT)
        t: Large/small threshold eps * p0 / 2
        k_const: Level-0 sub-interval width eps * t / (4 (kappa + 1))
        gamma_max: Number of sub-intervals per level, 2^(kappa+1) (kappa+1)
        xi0: Last regular profit bucket index, 7 (kappa+1) 2^(kappa+1) - 1
    """

    eps_input: Fraction
    eps: Fraction
    kappa: int
    p0: Fraction
    t: Fraction
    k_const: Fraction
    gamma_max: int
    xi0: int

    @property
    def delta(self) -> Fraction:
        """Relative loss of one rounding step, eps / (4 (kappa + 1))."""
        return self.eps / (4 * (self.kappa + 1))

    def quality(self, exponent: int) -> Fraction:
        """Exact factor (1 - delta)^exponent."""
        return (1 - self.delta) ** exponent

    @property
    def guarantee_exponent(self) -> int:
        """Number of rounding losses along the whole pipeline."""
        return 2 * self.kappa + 2

    @property
    def bucket_base(self) -> Fraction:
        """Lower end of the bucket grid, 2^(kappa-2) T = p0 / 4."""
        return self.t * 2 ** (self.kappa - 2)

    @property
    def bucket_width(self) -> Fraction:
        """Width of one profit bucket, 2^(kappa-2) K."""
        return self.k_const * 2 ** (self.kappa - 2)

    @property
    def bucket_count(self) -> int:
        """Buckets 0..xi0 plus the singleton bucket {2 p0}."""
        return self.xi0 + 2

    @property
    def max_reduced_slots(self) -> int:
        """Upper bound (kappa + 1) * gamma_max on the reduced large set."""
        return (self.kappa + 1) * self.gamma_max

    def level_bounds(self, k: int) -> Tuple[Fraction, Fraction]:
        """Half-open profit interval [2^k T, 2^(k+1) T) of level k."""
        return self.t * 2 ** k, self.t * 2 ** (k + 1)

    def interval_bounds(self, index: IntervalIndex) -> Tuple[Fraction, Fraction]:
        """Half-open endpoints of the sub-interval L_{k, gamma}."""
        k, gamma = index
        width = self.k_const * 2 ** k
        low = self.t * 2 ** k + gamma * width
        return low, low + width

    def bucket_bounds(self, xi: int) -> Tuple[Fraction, Fraction]:
        """Endpoints of bucket xi; the last bucket is the point [2 p0, 2 p0]."""
        if xi == self.xi0 + 1:
            return 2 * self.p0, 2 * self.p0
        low = self.bucket_base + xi * self.bucket_width
        return low, low + self.bucket_width


def normalize_epsilon(eps_input: Fraction, p0: Fraction) -> EpsParams:
    """
    Normalize the requested accuracy and derive all interval constants.

    Args:
        eps_input: Requested accuracy in (0, 1); values above 1/4 are clamped
        p0: Greedy lower bound of the instance

    Returns:
        EpsParams with eps = 2^(1 - kappa), the largest such power of two
        not exceeding min(eps_input, 1/4)

    Raises:
        InvalidParameterError: If eps_input is not in (0, 1) or p0 <= 0
    """
    eps_input = Fraction(eps_input)
    p0 = Fraction(p0)
    if not 0 < eps_input < 1:
        raise InvalidParameterError(f"epsilon must lie in (0, 1), got {eps_input}")
    if p0 <= 0:
        raise InvalidParameterError(f"p0 must be positive, got {p0}")

    target = eps_input
    if eps_input > EPS_CEILING:
        logger.warning(f"Epsilon {eps_input} clamped to {EPS_CEILING}")
        target = EPS_CEILING

    kappa = MIN_KAPPA
    while Fraction(2, 2 ** kappa) > target:
        kappa += 1

    eps = Fraction(2, 2 ** kappa)
    t = eps * p0 / 2
    k_const = eps * t / (4 * (kappa + 1))
    params = EpsParams(
        eps_input=eps_input,
        eps=eps,
        kappa=kappa,
        p0=p0,
        t=t,
        k_const=k_const,
        gamma_max=2 ** (kappa + 1) * (kappa + 1),
        xi0=7 * (kappa + 1) * 2 ** (kappa + 1) - 1,
    )
    logger.debug(f"Normalized epsilon {eps_input} -> {eps} (kappa={kappa}, T={t}, K={k_const})")
    return params


def interval_index(p: Fraction, params: EpsParams) -> IntervalIndex:
    """
    Locate a large profit in the (k, gamma) sub-interval grid.

    Args:
        p: Profit with T <= p < 2 p0
        params: Interval geometry

    Returns:
        IntervalIndex with p in [2^k T + gamma 2^k K, 2^k T + (gamma+1) 2^k K)

    Raises:
        OutOfRangeError: If p < T or p >= 2 p0
    """
    if p < params.t or p >= 2 * params.p0:
        raise OutOfRangeError(f"profit {p} outside [{params.t}, {2 * params.p0})")

    k = 0
    upper = params.t * 2
    while p >= upper:
        k += 1
        upper *= 2

    gamma = (p - params.t * 2 ** k) // (params.k_const * 2 ** k)
    return IntervalIndex(k=k, gamma=int(gamma))


def xi_index(p: Fraction, params: EpsParams) -> int:
    """
    Locate a tuple profit in the DP bucket grid over [p0/4, 2 p0].

    Args:
        p: Profit with p0/4 <= p <= 2 p0
        params: Interval geometry

    Returns:
        Bucket index in 0..xi0+1; xi0+1 exactly when p = 2 p0

    Raises:
        OutOfRangeError: If p lies outside [p0/4, 2 p0]
    """
    top = 2 * params.p0
    if p < params.bucket_base or p > top:
        raise OutOfRangeError(f"profit {p} outside [{params.bucket_base}, {top}]")
    if p == top:
        return params.xi0 + 1
    return int((p - params.bucket_base) // params.bucket_width)
