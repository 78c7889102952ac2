#!/usr/bin/env python3
"""Tabulate the four related scattering amplitudes over a momentum range.

Runs ``isospec scatter`` for the showcase gpt instance; extra arguments are
forwarded, e.g. ``python3 scripts/scan_scattering.py --kmax 10 --out s.csv``.
"""
import sys

from isospec.cli import main

if __name__ == "__main__":
    raise SystemExit(main(["scatter", "--family", "gpt", *sys.argv[1:]]))
