"""
Utility functions and helpers.

Common utility functions used across the package: exact rational
parsing and formatting, and the non-dominated filter over
(profit, size) pairs.
"""

import logging
import re
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple


logger = logging.getLogger(__name__)

_RATIONAL_PATTERN = re.compile(r'^[+-]?(\d+(/\d+)?|\d*\.\d+|\d+\.\d*)$')


def parse_rational(text: str) -> Fraction:
    """
    Parse an exact rational written as ``a/b``, an integer or a decimal.

    Decimals are read exactly (``0.3`` is 3/10, never a binary float).

    Args:
        text: Rational literal

    Returns:
        The parsed value

    Raises:
        ValueError: If the literal is malformed or has a zero denominator
    """
    literal = text.strip()
    if not _RATIONAL_PATTERN.match(literal):
        raise ValueError(f"not a rational literal: {text!r}")
    try:
        return Fraction(literal)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def format_rational(value: Fraction) -> str:
    """
    Format a rational in canonical ``a/b`` form.

    Args:
        value: Rational to render

    Returns:
        ``numerator/denominator`` in lowest terms (denominator always shown)
    """
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def ceil_div(numerator: Fraction, denominator: Fraction) -> int:
    """Exact ceiling of a positive rational quotient."""
    return -((-numerator) // denominator)


def pareto_filter(points: Iterable[Tuple[Fraction, Fraction]]) -> List[Tuple[Fraction, Fraction]]:
    """
    Keep the non-dominated (profit, size) pairs.

    A pair is dominated by another when its profit is not larger and its
    size is not smaller. Duplicates collapse to one pair.

    Args:
        points: Iterable of (profit, size) pairs

    Returns:
        Pairs sorted by strictly increasing profit and strictly
        increasing size
    """
    ordered: Sequence[Tuple[Fraction, Fraction]] = sorted(set(points), key=lambda ps: (-ps[0], ps[1]))
    kept = []
    best_size = None
    for profit, size in ordered:
        if best_size is None or size < best_size:
            kept.append((profit, size))
            best_size = size
    kept.reverse()
    return kept
