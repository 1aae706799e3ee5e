"""Run the command line with ``python -m ukp_fptas``."""

import sys

from .harness.cli import main

sys.exit(main())
