#!/usr/bin/env python3
"""Run every oracle crosscheck suite (structural vs brute force)."""

import sys

from qdpark.checks import CROSSCHECK_SUITES
from qdpark.cli import run

if __name__ == "__main__":
    code = 0
    for suite in CROSSCHECK_SUITES:
        code = max(code, run(["crosscheck", "--suite", suite]
                             + sys.argv[1:]))
    sys.exit(code)
