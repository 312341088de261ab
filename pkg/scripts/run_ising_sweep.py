#!/usr/bin/env python3
"""Transverse-field Ising sweep (j_par=0, j_perp=1) on h in [0, 1].

Reproduces the nearest-neighbor Ising field scan: concurrence of the full
and entangled parts, separable weight, and Bell-coefficient weights per
field point.  Pass --separation 2 for the next-nearest-neighbor variant.
"""
import sys

from lschain.cli import main

DEFAULTS = [
    "--j-par", "0",
    "--j-perp", "1",
    "--h-min", "0",
    "--h-max", "1",
    "--h-steps", "101",
    "--sites", "16",
    "--backend", "ed",
    "--out", "ising_sweep.csv",
]

if __name__ == "__main__":
    sys.exit(main(DEFAULTS + sys.argv[1:]))
