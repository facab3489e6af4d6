"""Subset-enumeration engine: Tutte and coboundary polynomials straight from
their defining sums over central subarrangements.

The reference path enumerates every subset and recomputes centrality and
rank from scratch each time, so it stays obviously correct; an incremental
variant prunes noncentral branches (supersets of a noncentral set are
noncentral) and must produce bit-identical results.  Both paths reduce the
sweep to a tally of ``(rank, size) -> count`` over central subsets, from
which either polynomial is assembled by binomial expansion.

Enumeration is embarrassingly parallel: the subset range can be split into
chunks whose tallies are combined by addition.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from .arrangement import Arrangement
from .errors import CapExceededError
from .polynomials import BiPoly

DEFAULT_CAP = 22


def _check_cap(a: Arrangement, cap: int | None):
    if cap is not None and len(a) > cap:
        raise CapExceededError(
            f"{len(a)} hyperplanes exceed the enumeration cap of {cap} "
            f"(2^{len(a)} subsets)")


def central_subset_counts(rows, lo: int, hi: int) -> Counter:
    """Tally (rank, size) over central subsets with mask in [lo, hi).

    Each subset is processed independently: gather its rows, run one exact
    elimination, drop it at the first inconsistent row.
    """
    counts: Counter = Counter()
    ncols = len(rows[0]) if rows else 1
    rhs = ncols - 1
    for mask in range(lo, hi):
        basis: list[tuple[int, list[int]]] = []
        size = 0
        central = True
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            size += 1
            r = list(rows[i])
            for p, b in basis:
                if r[p]:
                    f, g = r[p], b[p]
                    r = [ri * g - bi * f for ri, bi in zip(r, b)]
            p = next((k for k, v in enumerate(r) if v), None)
            if p is None:
                continue
            if p == rhs:
                central = False
                break
            g = 0
            for v in r:
                g = gcd(g, v)
            if g > 1:
                r = [v // g for v in r]
            basis.append((p, r))
            basis.sort(key=lambda e: e[0])
        if central:
            counts[(len(basis), size)] += 1
    return counts


def _counts_incremental(rows) -> Counter:
    """Same tally via depth-first search carrying the echelon basis along.

    Noncentral prefixes are pruned outright; output matches the per-subset
    recomputation exactly.
    """
    counts: Counter = Counter()
    m = len(rows)
    rhs = len(rows[0]) - 1 if rows else 0

    def rec(start: int, basis, size: int):
        counts[(len(basis), size)] += 1
        for j in range(start, m):
            r = list(rows[j])
            for p, b in basis:
                if r[p]:
                    f, g = r[p], b[p]
                    r = [ri * g - bi * f for ri, bi in zip(r, b)]
            p = next((k for k, v in enumerate(r) if v), None)
            if p is None:
                rec(j + 1, basis, size + 1)
            elif p != rhs:
                g = 0
                for v in r:
                    g = gcd(g, v)
                if g > 1:
                    r = [v // g for v in r]
                rec(j + 1, sorted(basis + [(p, r)], key=lambda e: e[0]), size + 1)
            # inconsistent: every superset through j is noncentral, skip it

    rec(0, [], 0)
    return counts


@lru_cache(maxsize=None)
def _counts_naive_cached(a: Arrangement) -> Counter:
    rows = a.int_rows()
    return central_subset_counts(rows, 0, 1 << len(rows))


@lru_cache(maxsize=None)
def _counts_incremental_cached(a: Arrangement) -> Counter:
    return _counts_incremental(a.int_rows())


def _tutte_from_counts(counts: Counter, rank: int) -> BiPoly:
    acc: dict[tuple[int, int], Fraction] = {}
    for (rb, k), mult in counts.items():
        # (x-1)^(rank-rb) (y-1)^(k-rb)
        for i in range(rank - rb + 1):
            ci = comb(rank - rb, i) * (-1) ** (rank - rb - i)
            for j in range(k - rb + 1):
                c = mult * ci * comb(k - rb, j) * (-1) ** (k - rb - j)
                e = (i, j)
                acc[e] = acc.get(e, Fraction(0)) + c
    return BiPoly(("x", "y"), acc)


def _coboundary_from_counts(counts: Counter, rank: int) -> BiPoly:
    acc: dict[tuple[int, int], Fraction] = {}
    for (rb, k), mult in counts.items():
        for j in range(k + 1):
            c = mult * comb(k, j) * (-1) ** (k - j)
            e = (rank - rb, j)
            acc[e] = acc.get(e, Fraction(0)) + c
    return BiPoly(("q", "t"), acc)


def tutte_by_definition(a: Arrangement, cap: int | None = DEFAULT_CAP) -> BiPoly:
    """Sum of (x-1)^(r(A)-r(B)) (y-1)^(|B|-r(B)) over central subsets B."""
    _check_cap(a, cap)
    return _tutte_from_counts(_counts_naive_cached(a), a.rank)


def coboundary_by_definition(a: Arrangement, cap: int | None = DEFAULT_CAP) -> BiPoly:
    """Sum of q^(r(A)-r(B)) (t-1)^|B| over central subsets B."""
    _check_cap(a, cap)
    return _coboundary_from_counts(_counts_naive_cached(a), a.rank)


def tutte_incremental(a: Arrangement) -> BiPoly:
    """Pruned-search variant of tutte_by_definition; identical output."""
    return _tutte_from_counts(_counts_incremental_cached(a), a.rank)


def coboundary_incremental(a: Arrangement) -> BiPoly:
    """Pruned-search variant of coboundary_by_definition; identical output."""
    return _coboundary_from_counts(_counts_incremental_cached(a), a.rank)


def coboundary_chunked(a: Arrangement, chunks: int, cap: int | None = DEFAULT_CAP) -> BiPoly:
    """Split the subset range into chunks and combine tallies by addition.

    The combined result is bit-identical to the sequential sweep; this is
    the merge contract a parallel driver must satisfy.
    """
    _check_cap(a, cap)
    rows = a.int_rows()
    total = 1 << len(rows)
    step = max(1, -(-total // max(1, chunks)))
    counts: Counter = Counter()
    lo = 0
    while lo < total:
        counts += central_subset_counts(rows, lo, min(total, lo + step))
        lo += step
    return _coboundary_from_counts(counts, a.rank)
