#!/usr/bin/env python3
"""Sweep the lower-bound ladder over a range of n and print the results."""

import argparse

from crosslab import bounds as bnd


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=6)
    ap.add_argument("--n-max", type=int, default=60)
    args = ap.parse_args()

    for n in range(args.n_min, args.n_max + 1):
        row = f"n={n:3d}  lb={bnd.lb_crossing(n):>8d}"
        if n % 3 == 0:
            row += f"  lb(sym3)={bnd.lb_crossing(n, sym3=True):>8d}"
        print(row)


if __name__ == "__main__":
    main()
