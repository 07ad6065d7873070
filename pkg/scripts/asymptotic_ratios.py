#!/usr/bin/env python3
"""Tabulate coefficient/estimate ratios for the a, b, d sequences.

For each requested n this prints the exact coefficient divided by two
candidate leading-order estimates:

* ``printed``  - sqrt(n/pi) 4^n, (n/2) 4^n, (8/3) sqrt(n^3/pi) 4^n;
* ``corrected`` - the same shapes scaled by 1/4, 1/4 and 1/16,
  i.e. (1/4) sqrt(n/pi) 4^n, (n/8) 4^n, (1/6) sqrt(n^3/pi) 4^n.

The corrected ratios drift toward 1 like 1 - O(1/sqrt(n)); the printed
ones converge to 1/4, 1/4 and 1/16 instead.  Useful for judging how far
out one must go before a given tolerance band closes.
"""
from __future__ import annotations

import argparse
from fractions import Fraction

from patclass import series
from patclass.series import asymptotic_estimate, named_series

SCALE = {series.A132: Fraction(1, 4), series.B231: Fraction(1, 4),
         series.D321: Fraction(1, 16)}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", default="100,300,1000",
                    help="comma-separated values of n")
    args = ap.parse_args()
    points = sorted(int(v) for v in args.points.split(","))

    order = points[-1]
    gfs = {name: named_series(name, order) for name in SCALE}

    header = f"{'n':>6}" + "".join(
        f"  {label}/printed  {label}/corr" for label in ("a", "b", "d"))
    print(header)
    for n in points:
        cells = []
        for name in (series.A132, series.B231, series.D321):
            printed = gfs[name][n] / asymptotic_estimate(name, n)
            cells.append(f"{float(printed):11.4f}")
            cells.append(f"{float(printed / SCALE[name]):8.4f}")
        print(f"{n:>6}" + "  ".join([""] + cells))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
