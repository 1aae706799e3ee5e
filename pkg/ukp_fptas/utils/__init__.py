"""
Utilities Module

Common rational helpers and the Pareto filter.
"""

from .helpers import parse_rational, format_rational, pareto_filter, ceil_div

__all__ = ["parse_rational", "format_rational", "pareto_filter", "ceil_div"]
