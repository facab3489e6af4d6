#!/usr/bin/env python3
"""Print symbolic invariants for the built-in families: coboundary and
characteristic polynomials, Tutte polynomial, and region counts.

Usage: python scripts/family_tables.py [--max-n 3]
"""

import argparse

from arrpoly import (
    bounded_regions,
    build_family,
    recover_characteristic,
    recover_coboundary,
    regions,
    tutte_from_coboundary,
)
from arrpoly.families import FAMILY_NAMES


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=3)
    args = ap.parse_args()

    for name in FAMILY_NAMES:
        for n in range(2, args.max_n + 1):
            a = build_family(name, n)
            cb = recover_coboundary(a)
            chi = recover_characteristic(a)
            print(f"{name} n={n}  ({len(a)} hyperplanes, rank {a.rank})")
            print(f"  coboundary:     {cb}")
            print(f"  tutte:          {tutte_from_coboundary(cb, a.rank)}")
            print(f"  characteristic: {chi}")
            print(f"  regions: {regions(chi, a.dim)}, "
                  f"bounded: {bounded_regions(chi, a.rank)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
