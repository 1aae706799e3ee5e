"""
Harness Module

Instance files, seeded generation, benchmarks and the command line.
"""

from .bench import BenchRecord, BenchRunner, calibrate_complexity, records_to_frame, write_csv
from .generator import PROFILES, generate_instance
from .instance_io import parse_instance, parse_result, render_instance, render_result

__all__ = [
    "BenchRecord",
    "BenchRunner",
    "calibrate_complexity",
    "records_to_frame",
    "write_csv",
    "PROFILES",
    "generate_instance",
    "parse_instance",
    "parse_result",
    "render_instance",
    "render_result",
]
