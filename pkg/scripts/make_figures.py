#!/usr/bin/env python3
"""Emit the twelve showcase figure tables (fig1a..fig3d) as CSV files.

Any extra arguments are forwarded to ``isospec figures``, e.g.
``python3 scripts/make_figures.py --out figures --format tsv``.
"""
import sys

from isospec.cli import main

if __name__ == "__main__":
    raise SystemExit(main(["figures", *sys.argv[1:]]))
