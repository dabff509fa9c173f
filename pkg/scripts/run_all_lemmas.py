#!/usr/bin/env python3
"""Run every lemma check at its natural primes."""

import sys

from qdpark.cli import run

PLAN = [
    ("2.1", [2, 3, 5]),
    ("2.2", [2]),
    ("2.3", [2, 3, 5]),
    ("3.1", [2, 3, 5]),
    ("3.2", [2, 3]),
    ("3.3", [2, 3, 5]),
    ("4.1", [2, 3, 5, 7]),
    ("4.2", [3, 5, 7]),
    ("4.3", [3, 5]),
]

if __name__ == "__main__":
    code = 0
    for lid, primes in PLAN:
        for p in primes:
            code = max(code, run(["lemma", "--id", lid, "--p", str(p)]
                                 + sys.argv[1:]))
    sys.exit(code)
