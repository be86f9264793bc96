#!/usr/bin/env python3
"""Measure the worst-case error of the averaged-partial-sum L(1) estimate.

Runs the approximate class number recovery for every fundamental discriminant
in a range and reports the largest absolute error, so the frozen tolerance in
genusmass.verify.DirichletConfig can be audited.  Usage:

    python3 scripts/calibrate_dirichlet.py --lo -500 --terms 1000000
"""

from __future__ import annotations

import argparse
import math

from genusmass.arith import is_fundamental
from genusmass.class_group import build_class_group
from genusmass.forms import automorph_count
from genusmass.verify import _dirichlet_l1


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--lo", type=int, default=-500)
    parser.add_argument("--hi", type=int, default=-3)
    parser.add_argument("--terms", type=int, default=10**6)
    args = parser.parse_args()

    worst = (0.0, None)
    for delta in range(args.hi, args.lo - 1, -1):
        if delta % 4 not in (0, 1) or not is_fundamental(delta):
            continue
        group = build_class_group(delta)
        l1 = _dirichlet_l1(delta, args.terms)
        computed = automorph_count(delta) * math.sqrt(-delta) / (2 * math.pi) * l1
        err = abs(computed - group.h)
        if err > worst[0]:
            worst = (err, delta)
            print(f"delta={delta:5d} h={group.h:3d} computed={computed:.8f} err={err:.3e}")
    print(f"\nworst error: {worst[0]:.3e} at delta={worst[1]} with {args.terms} terms")


if __name__ == "__main__":
    main()
