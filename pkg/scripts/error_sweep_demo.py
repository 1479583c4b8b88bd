#!/usr/bin/env python3
"""Show how float summation error grows with term count and ratio.

For each ratio r the chase series (x0 = 1, sa = 1, st = r) is summed in
binary64 with naive and Kahan-compensated accumulation at a ladder of
term counts, and the relative error against the exact rational value is
printed in units of u = 2^-53. The last column is the drift scale
r/(1-r) of the iterated term generation: once it dominates, even the
compensated sum cannot stay inside a flat few-ulp envelope, which is
visible here as the compensated column tracking the drift scale rather
than staying near 1.

Deterministic output; run with --help for the knobs.
"""

import argparse
from fractions import Fraction

from zenoseq.floatsum import sum_compensated, sum_naive
from zenoseq.race import RaceConfig
from zenoseq.rational import parse

U = Fraction(1, 2**53)
LADDER = [0, 1, 3, 10, 31, 100, 316, 1000, 3162, 10000]


def in_ulps(rel_error: Fraction) -> str:
    return f"{float(rel_error / U):10.3f}"


def main() -> int:
    cli = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    cli.add_argument(
        "--ratios",
        default="1/10,1/3,1/2,9/10,99/100",
        help="comma-separated list of rational ratios in [0, 1)",
    )
    cli.add_argument(
        "--nmax", type=int, default=10_000, help="largest term index to sample"
    )
    args = cli.parse_args()

    ratios = [parse(text) for text in args.ratios.split(",")]
    ns = [n for n in LADDER if n <= args.nmax]

    for r in ratios:
        config = RaceConfig(x0=1, sa=1, st=r)
        drift = r / (1 - r)
        print(f"ratio {r}  (drift scale r/(1-r) = {float(drift):.2f})")
        print(f"  {'n':>6}  {'naive/u':>10}  {'compensated/u':>13}")
        for n in ns:
            naive = sum_naive(config, n)
            comp = sum_compensated(config, n)
            print(f"  {n:>6}  {in_ulps(naive.rel_error)}  {in_ulps(comp.rel_error):>13}")
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
