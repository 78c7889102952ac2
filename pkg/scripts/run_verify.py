#!/usr/bin/env python3
"""Run the spectral verification suite for every model family.

Any extra arguments are forwarded to each ``isospec verify`` invocation,
e.g. ``python3 scripts/run_verify.py --levels 4 --tol 1e-4``.  The exit
code is the worst per-family verdict (0 ok, 1 failure, 3 non-convergence).
"""
import sys

from isospec.cli import main
from isospec.models import FAMILIES


def run(extra_args):
    worst = 0
    for family in FAMILIES:
        code = main(["verify", "--family", family, *extra_args])
        worst = max(worst, code)
        print()
    return worst


if __name__ == "__main__":
    raise SystemExit(run(sys.argv[1:]))
