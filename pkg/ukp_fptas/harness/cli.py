"""
Command-line interface: solve, verify, gen and bench.

Exit codes:
    0  success
    2  parse, parameter or empty-instance error (also argparse usage errors)
    3  solver error
    4  approximation guarantee or certificate check failed
    5  oracle budget exceeded
"""

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

from ..config import config
from ..exceptions import (
    EmptyInstanceError,
    InstanceParseError,
    InvalidParameterError,
    InvariantViolation,
    KnapsackError,
    OracleBudgetError,
)
from ..model import Instance
from ..oracle import GridInstance, brute_force, exact_dp
from ..solver import SolveResult, solve, verify_certificate
from ..utils import format_rational, parse_rational
from .bench import BenchRunner, calibrate_complexity, write_csv
from .generator import PROFILES, generate_instance
from .instance_io import parse_instance, render_instance, render_result


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_SOLVER = 3
EXIT_GUARANTEE = 4
EXIT_BUDGET = 5

SolveFn = Callable[[Instance, Fraction], SolveResult]


def _parse_eps(text: str) -> Fraction:
    try:
        eps = parse_rational(text)
    except ValueError as e:
        raise InvalidParameterError(f"invalid epsilon: {e}") from None
    if not 0 < eps < 1:
        raise InvalidParameterError(f"epsilon must lie in (0, 1), got {text}")
    return eps


def _load(path: str) -> Instance:
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise InstanceParseError(f"cannot read {path}: {e}") from None
    except UnicodeDecodeError as e:
        raise InstanceParseError(f"{path} is not UTF-8 text: {e.reason} at byte {e.start}") from None
    return parse_instance(text)


def _parse_sizes(text: str) -> List[Tuple[int, int]]:
    sizes = []
    for chunk in text.split(','):
        try:
            n, denominator = chunk.split(':')
            sizes.append((int(n), int(denominator)))
        except ValueError:
            raise InvalidParameterError(f"size {chunk!r} is not of the form n:D") from None
    return sizes


def _parse_seeds(text: str) -> List[int]:
    if '..' in text:
        low, high = text.split('..')
        return list(range(int(low), int(high) + 1))
    return [int(seed) for seed in text.split(',')]


def cmd_solve(args: argparse.Namespace) -> int:
    """Solve an instance file and print the result."""
    try:
        instance = _load(args.input)
        eps = _parse_eps(args.eps)
    except (InstanceParseError, InvalidParameterError, EmptyInstanceError) as e:
        logger.error(str(e))
        return EXIT_INPUT

    try:
        result = solve(instance, eps)
    except KnapsackError as e:
        logger.error(f"Solver failed: {e}")
        return EXIT_SOLVER

    sys.stdout.write(render_result(result, args.emit))
    return EXIT_OK


def run_verify(
    instance: Instance,
    eps: Fraction,
    oracle: str = 'dp',
    budget: Optional[int] = None,
    solve_fn: SolveFn = solve,
) -> int:
    """
    Solve and compare against an exact oracle.

    Args:
        instance: Instance to check
        eps: Requested accuracy
        oracle: 'dp' (grid DP) or 'brute' (copy-vector enumeration)
        budget: Oracle budget override
        solve_fn: Solver to check (tests inject tampered solvers)

    Returns:
        Exit status
    """
    try:
        result = solve_fn(instance, eps)
    except KnapsackError as e:
        logger.error(f"Solver failed: {e}")
        return EXIT_SOLVER

    try:
        if oracle == 'dp':
            opt, _ = exact_dp(GridInstance.from_items(instance), budget=budget)
        else:
            max_copies = max(int(1 // item.size) for item in instance.items)
            opt = brute_force(instance, max_copies, budget=budget)
    except OracleBudgetError as e:
        logger.error(f"Oracle budget exceeded: {e}")
        return EXIT_BUDGET

    eps_used = result.params.eps if result.params is not None else eps
    ratio = result.profit / opt if opt else Fraction(1)
    sys.stdout.write(
        f"profit {format_rational(result.profit)}\n"
        f"opt {format_rational(opt)}\n"
        f"ratio {format_rational(ratio)}\n"
    )

    try:
        verify_certificate(instance, result.solution)
        if result.profit != result.solution.total_profit:
            raise InvariantViolation("reported profit differs from certificate total")
    except InvariantViolation as e:
        logger.error(f"Certificate check failed: {e}")
        return EXIT_GUARANTEE

    if result.profit < (1 - eps_used) * opt:
        logger.error(f"Guarantee violated: {result.profit} < (1 - {eps_used}) * {opt}")
        return EXIT_GUARANTEE
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Solve an instance file and check it against an exact oracle."""
    try:
        instance = _load(args.input)
        eps = _parse_eps(args.eps)
    except (InstanceParseError, InvalidParameterError, EmptyInstanceError) as e:
        logger.error(str(e))
        return EXIT_INPUT
    return run_verify(instance, eps, args.oracle, args.budget)


def cmd_gen(args: argparse.Namespace) -> int:
    """Write a generated instance."""
    try:
        instance = generate_instance(args.n, args.denominator, args.seed, args.profile)
    except InvalidParameterError as e:
        logger.error(str(e))
        return EXIT_INPUT

    text = render_instance(instance)
    if args.output:
        try:
            Path(args.output).write_text(text, encoding='utf-8')
        except OSError as e:
            logger.error(f"Cannot write {args.output}: {e}")
            return EXIT_INPUT
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    """Run a benchmark grid and write the CSV."""
    try:
        eps_list = [_parse_eps(eps) for eps in args.eps_list.split(',')]
        runner = BenchRunner(eps_list, profile=args.profile, oracle_budget=args.budget, workers=args.workers)
        records = runner.run(_parse_sizes(args.sizes), _parse_seeds(args.seeds))
    except (InvalidParameterError, ValueError) as e:
        logger.error(str(e))
        return EXIT_INPUT
    except KnapsackError as e:
        logger.error(f"Benchmark failed: {e}")
        return EXIT_SOLVER

    try:
        write_csv(records, args.csv)
    except OSError as e:
        logger.error(f"Cannot write {args.csv}: {e}")
        return EXIT_INPUT

    if args.calibrate:
        try:
            report = calibrate_complexity(records)
        except InvalidParameterError as e:
            logger.error(str(e))
            return EXIT_INPUT
        sys.stdout.write(report.to_string(index=False) + "\n")
        if not report['within_bound'].all():
            logger.error("Tuple counter exceeds the calibrated bound")
            return EXIT_GUARANTEE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for all subcommands."""
    parser = argparse.ArgumentParser(
        prog='ukp-fptas',
        description='Approximation scheme for the Unbounded Knapsack Problem',
    )
    parser.add_argument('--log-level', default=None, help='override LOG_LEVEL')
    sub = parser.add_subparsers(dest='command', required=True)

    p_solve = sub.add_parser('solve', help='solve an instance file')
    p_solve.add_argument('--input', required=True, help='instance file')
    p_solve.add_argument('--eps', default=config.default_eps, help='accuracy in (0, 1), e.g. 1/8')
    p_solve.add_argument('--emit', choices=('text', 'machine'), default='text')
    p_solve.set_defaults(handler=cmd_solve)

    p_verify = sub.add_parser('verify', help='check the guarantee against an exact oracle')
    p_verify.add_argument('--input', required=True, help='instance file')
    p_verify.add_argument('--eps', default=config.default_eps, help='accuracy in (0, 1)')
    p_verify.add_argument('--oracle', choices=('dp', 'brute'), default='dp')
    p_verify.add_argument('--budget', type=int, default=None, help='oracle work budget')
    p_verify.set_defaults(handler=cmd_verify)

    p_gen = sub.add_parser('gen', help='generate a seeded instance')
    p_gen.add_argument('--n', type=int, required=True, help='number of items')
    p_gen.add_argument('--denominator', '-D', type=int, required=True, help='size grid D')
    p_gen.add_argument('--seed', type=int, default=0)
    p_gen.add_argument('--profile', choices=PROFILES, default='uniform')
    p_gen.add_argument('--output', default=None, help='file to write (stdout if omitted)')
    p_gen.set_defaults(handler=cmd_gen)

    p_bench = sub.add_parser('bench', help='benchmark grid to CSV')
    p_bench.add_argument('--eps-list', default='1/4,1/8', help='comma-separated accuracies')
    p_bench.add_argument('--sizes', default='20:32', help='comma-separated n:D pairs')
    p_bench.add_argument('--seeds', default='0..4', help='comma list or a..b range')
    p_bench.add_argument('--profile', choices=PROFILES, default='uniform')
    p_bench.add_argument('--budget', type=int, default=None, help='oracle DP budget')
    p_bench.add_argument('--workers', type=int, default=None, help='worker processes')
    p_bench.add_argument('--csv', required=True, help='output CSV path')
    p_bench.add_argument('--calibrate', action='store_true', help='check tuple counters against C/eps^2 log^3')
    p_bench.set_defaults(handler=cmd_bench)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """CLI entry point."""
    args = build_parser().parse_args(argv)
    config.setup_logging(args.log_level)
    return args.handler(args)
