"""
Instance files and machine-readable results.

Instance grammar (UTF-8, one directive per line):

    # comment
    c <rational>               capacity (optional, default 1)
    item <profit> <size>       repeated

Rationals are written ``a/b``, as integers, or as decimals (read
exactly). Sizes are divided by the capacity on load and items that no
longer fit are dropped.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Tuple

from ..exceptions import EmptyInstanceError, InstanceParseError, InvalidParameterError
from ..model import Instance
from ..solver import SolveResult
from ..utils import format_rational, parse_rational


logger = logging.getLogger(__name__)


def _rational(token: str, what: str, line_number: int) -> Fraction:
    try:
        return parse_rational(token)
    except ValueError as e:
        raise InstanceParseError(f"bad {what}: {e}", line_number) from None


def parse_instance(text: str) -> Instance:
    """
    Parse instance text into a normalized instance.

    Args:
        text: Instance file contents

    Returns:
        Instance with capacity normalized to 1

    Raises:
        InstanceParseError: On syntax errors or nonpositive values
        EmptyInstanceError: If no item fits the knapsack
    """
    capacity = Fraction(1)
    capacity_seen = False
    pairs: List[Tuple[Fraction, Fraction]] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        directive, *args = line.split()
        if directive == 'c':
            if len(args) != 1:
                raise InstanceParseError("'c' takes exactly one rational", line_number)
            if capacity_seen:
                raise InstanceParseError("capacity given twice", line_number)
            capacity = _rational(args[0], "capacity", line_number)
            if capacity <= 0:
                raise InstanceParseError(f"nonpositive capacity {args[0]}", line_number)
            capacity_seen = True
        elif directive == 'item':
            if len(args) != 2:
                raise InstanceParseError("'item' takes a profit and a size", line_number)
            profit = _rational(args[0], "profit", line_number)
            size = _rational(args[1], "size", line_number)
            if profit <= 0:
                raise InstanceParseError(f"nonpositive profit {args[0]}", line_number)
            if size <= 0:
                raise InstanceParseError(f"nonpositive size {args[1]}", line_number)
            if profit > 1:
                raise InstanceParseError(f"profit {args[0]} exceeds 1", line_number)
            pairs.append((profit, size))
        else:
            raise InstanceParseError(f"unknown directive {directive!r}", line_number)

    try:
        instance = Instance.from_pairs(pairs, capacity)
    except InvalidParameterError as e:
        raise InstanceParseError(str(e)) from None
    if instance.dropped:
        logger.warning(f"{instance.dropped} item(s) larger than capacity {capacity} were dropped")
    if not instance.items:
        raise EmptyInstanceError("instance file has no item that fits the knapsack")
    return instance


def render_instance(instance: Instance) -> str:
    """
    Render a normalized instance in the instance grammar.

    Args:
        instance: Instance to write

    Returns:
        Text that parse_instance maps back to an equal instance
    """
    lines = [f"# {len(instance)} items", f"c {format_rational(instance.capacity)}"]
    for item in instance.items:
        lines.append(f"item {format_rational(item.profit)} {format_rational(item.size)}")
    return "\n".join(lines) + "\n"


def render_result(result: SolveResult, emit: str = 'machine') -> str:
    """
    Render a solve result.

    Args:
        result: Result to render
        emit: 'machine' for the line grammar, 'text' for a readable summary

    Returns:
        Rendered text ending with a newline
    """
    solution = result.solution
    counters = result.stats.as_dict()
    if emit == 'machine':
        lines = [
            f"profit {format_rational(result.profit)}",
            f"size {format_rational(solution.total_size)}",
            f"branch {result.mode.value}",
        ]
        lines += [f"take {index} {count}" for index, count in solution.takes()]
        lines += [f"counter {name} {value}" for name, value in counters.items()]
        return "\n".join(lines) + "\n"

    lines = [
        f"Profit: {format_rational(result.profit)} (~{float(result.profit):.6f})",
        f"Size:   {format_rational(solution.total_size)}",
        f"Branch: {result.mode.value}",
    ]
    if result.params is not None:
        lines.append(f"Epsilon: {format_rational(result.params.eps)} (kappa={result.params.kappa})")
    lines.append("Items:")
    lines += [f"  item {index} x {count}" for index, count in solution.takes()]
    lines.append("Counters:")
    lines += [f"  {name}: {value}" for name, value in counters.items()]
    return "\n".join(lines) + "\n"


def parse_result(text: str) -> Dict[str, object]:
    """
    Read machine output back.

    Returns:
        Dict with 'profit', 'size' (Fractions), 'branch' (str),
        'takes' (index -> multiplicity) and 'counters' (name -> int)
    """
    parsed: Dict[str, object] = {'takes': {}, 'counters': {}}
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        key, *args = line.split()
        if key in ('profit', 'size') and len(args) == 1:
            parsed[key] = parse_rational(args[0])
        elif key == 'branch' and len(args) == 1:
            parsed[key] = args[0]
        elif key == 'take' and len(args) == 2:
            parsed['takes'][int(args[0])] = int(args[1])
        elif key == 'counter' and len(args) == 2:
            parsed['counters'][args[0]] = int(args[1])
        else:
            raise InstanceParseError(f"unexpected result line {line!r}", line_number)
    return parsed
