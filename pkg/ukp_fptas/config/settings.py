"""
Solver settings and configuration management.

Loads settings from environment variables and provides a centralized
configuration object. Nothing is required: every setting has a default.
"""

import os
import logging
from fractions import Fraction
from typing import Optional
from pathlib import Path
from dotenv import load_dotenv


# Load environment variables from .env file if it exists
env_path = Path(__file__).parent.parent.parent / '.env'
if env_path.exists():
    load_dotenv(env_path)


logger = logging.getLogger(__name__)


class Config:
    """
    Configuration class for solver and harness settings.

    Loads settings from environment variables with sensible defaults.
    Values are read once at construction; build a new Config to pick up
    changed variables (tests do this with monkeypatched environments).
    """

    def __init__(self):
        """Initialize configuration from environment variables."""

        # Solver
        self.default_eps: str = os.getenv('DEFAULT_EPS', '1/4')

        # Oracle work budgets
        self.oracle_dp_budget: int = int(os.getenv('ORACLE_DP_BUDGET', '1000000'))
        self.brute_force_budget: int = int(os.getenv('BRUTE_FORCE_BUDGET', '10000000'))
        self.structured_enum_budget: int = int(os.getenv('STRUCTURED_ENUM_BUDGET', '1000000'))

        # Benchmark harness
        self.bench_workers: int = int(os.getenv('BENCH_WORKERS', '1'))
        # reported only; numpy.random.default_rng is always PCG64
        self.rng_algorithm: str = 'PCG64'

        # Logging Configuration
        self.log_level: str = os.getenv('LOG_LEVEL', 'INFO')
        self.log_file: Optional[str] = os.getenv('LOG_FILE')

    def setup_logging(self, level: Optional[str] = None) -> None:
        """
        Configure logging based on settings.

        Args:
            level: Optional override for the configured log level
        """
        log_level = getattr(logging, (level or self.log_level).upper(), logging.INFO)

        handlers = [logging.StreamHandler()]
        if self.log_file:
            handlers.append(logging.FileHandler(self.log_file))

        logging.basicConfig(
            level=log_level,
            format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            handlers=handlers
        )

    def validate(self) -> bool:
        """
        Validate that the configuration values are usable.

        Returns:
            True if configuration is valid, False otherwise
        """
        errors = []

        try:
            eps = Fraction(self.default_eps)
            if not 0 < eps < 1:
                errors.append(f"DEFAULT_EPS must lie in (0, 1), got {self.default_eps}")
        except (ValueError, ZeroDivisionError):
            errors.append(f"DEFAULT_EPS is not a rational: {self.default_eps}")

        for name in ('oracle_dp_budget', 'brute_force_budget', 'structured_enum_budget'):
            if getattr(self, name) <= 0:
                errors.append(f"{name.upper()} must be positive")

        if self.bench_workers < 1:
            errors.append("BENCH_WORKERS must be at least 1")

        if errors:
            for error in errors:
                logger.error(f"Configuration error: {error}")
            return False

        return True

    def __repr__(self) -> str:
        """String representation."""
        return (
            f"Config("
            f"default_eps={self.default_eps}, "
            f"oracle_dp_budget={self.oracle_dp_budget}, "
            f"brute_force_budget={self.brute_force_budget}, "
            f"structured_enum_budget={self.structured_enum_budget}, "
            f"bench_workers={self.bench_workers})"
        )


# Global configuration instance
config = Config()
