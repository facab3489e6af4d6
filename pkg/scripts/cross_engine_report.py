#!/usr/bin/env python3
"""Sweep the built-in families and report cross-engine agreement with timings.

Usage: python scripts/cross_engine_report.py [--max-n 4] [--primes 5,7,11]
"""

import argparse
import time

from arrpoly import (
    build_family,
    certify_prime,
    coboundary_at_prime,
    coboundary_by_definition,
    coboundary_closed_form,
)
from arrpoly.families import FAMILY_NAMES


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--primes", default="5,7,11")
    args = ap.parse_args()
    primes = [int(tok) for tok in args.primes.split(",")]

    failures = 0
    print(f"{'family':<15}{'n':>3}{'|A|':>5}{'rank':>6}{'q':>4}"
          f"{'subset':>9}{'fq':>9}{'closed':>9}  agree")
    for name in FAMILY_NAMES:
        for n in range(2, args.max_n + 1):
            a = build_family(name, n)
            t0 = time.perf_counter()
            subset = coboundary_by_definition(a)
            t_subset = time.perf_counter() - t0
            for q in primes:
                if not certify_prime(a, q):
                    print(f"{name:<15}{n:>3}{len(a):>5}{a.rank:>6}{q:>4}"
                          f"{'':>9}{'':>9}{'':>9}  skipped (uncertified)")
                    continue
                t0 = time.perf_counter()
                fq = coboundary_at_prime(a, q)
                t_fq = time.perf_counter() - t0
                t0 = time.perf_counter()
                closed = coboundary_closed_form(a, q)
                t_closed = time.perf_counter() - t0
                ok = subset.substitute(0, q) == fq == closed
                failures += not ok
                print(f"{name:<15}{n:>3}{len(a):>5}{a.rank:>6}{q:>4}"
                      f"{t_subset:>8.2f}s{t_fq:>8.2f}s{t_closed:>8.2f}s"
                      f"  {'OK' if ok else 'MISMATCH'}")
    print("all engines agree" if not failures else f"{failures} MISMATCHES")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
