#!/usr/bin/env python3
"""End-to-end main-theorem run: direct linear algebra at p = 2.

Constructs the wreath product G = P wr S_3 over the Sylow 2-subgroup of
Qd(2), embeds the model, verifies the Scott module is absolutely
indecomposable and sweeps Brauer quotients over every vertex subgroup.
"""

import sys

from qdpark.cli import run

if __name__ == "__main__":
    sys.exit(run(["theorem", "--main", "--p", "2", "--mode", "direct"]
                 + sys.argv[1:]))
