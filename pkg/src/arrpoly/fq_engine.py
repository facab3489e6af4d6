"""Finite-field point-counting engine.

For a prime q whose reduction is combinatorially faithful, summing t^(h(x))
over all points x of F_q^n, where h(x) counts the hyperplanes through x,
gives q^(n - rank) times the coboundary polynomial evaluated at that q.
Setting t = 0 recovers the point count off the arrangement, i.e. the
characteristic polynomial at q.

Certification of a prime is behavioral rather than determinant-based: the
reduced arrangement must keep all hyperplanes distinct, and every subset up
to size n+1 must agree with the rational side in centrality and rank (rank
functions that agree on those subsets agree everywhere, since any larger
subset contains a spanning independent one of size at most n+1; small
arrangements get a full sweep as well).

The point sweep walks each hyperplane's own q^(n-1) solutions instead of
testing all q^n points against every row, accumulating per-point incidence
counts; slabs with fixed first coordinate give deterministic parallel
chunks whose histograms merge by addition.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from . import linalg
from .arrangement import Arrangement
from .errors import CertificationError, InputError, IntegrityAlarm
from .polynomials import UniPoly

FULL_SWEEP_LIMIT = 12  # arrangements up to this size get an all-subsets certification


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FqPoint:
    """A point of F_q^n with its modulus."""

    coords: tuple[int, ...]
    q: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise InputError(f"{self.q} is not prime")
        if any(not (0 <= c < self.q) for c in self.coords):
            raise InputError("coordinates must be residues in 0..q-1")


def clear_denominators(a: Arrangement) -> tuple[tuple[int, ...], ...]:
    """Integer form of each hyperplane: scaled to coprime integer
    coefficients (same hyperplane set geometrically)."""
    return a.int_rows()


@dataclass(frozen=True)
class ReducedArrangement:
    """An arrangement reduced mod q, with all hyperplanes still distinct."""

    source: Arrangement
    q: int
    rows: tuple[tuple[int, ...], ...]  # (a_1..a_n, b) mod q, source order

    def __init__(self, source: Arrangement, q: int):
        if not is_prime(q):
            raise InputError(f"{q} is not prime")
        rows = []
        canon = set()
        for r in clear_denominators(source):
            c = linalg.canonical_row_mod(r, q)
            if c is None:
                raise CertificationError(
                    f"a hyperplane degenerates mod {q} (all coefficients vanish)")
            canon.add(c)
            rows.append(linalg.row_mod(r, q))
        if len(canon) != len(source):
            raise CertificationError(f"distinct hyperplanes collide mod {q}")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "rows", tuple(rows))

    @property
    def dim(self) -> int:
        return self.source.dim


def _try_reduce(a: Arrangement, q: int) -> ReducedArrangement | None:
    try:
        return ReducedArrangement(a, q)
    except CertificationError:
        return None


@lru_cache(maxsize=None)
def _rational_rank_table(a: Arrangement, upto: int) -> dict:
    rows = a.int_rows()
    table = {}
    for k in range(1, upto + 1):
        for idx in combinations(range(len(rows)), k):
            table[idx] = linalg.ranks([rows[i] for i in idx])
    return table


@lru_cache(maxsize=None)
def certify_prime(a: Arrangement, q: int) -> bool:
    """True iff the reduction mod q is certified combinatorially correct."""
    if not is_prime(q):
        raise InputError(f"{q} is not prime")
    if _try_reduce(a, q) is None:
        return False
    rows = a.int_rows()
    m, n = len(rows), a.dim
    upto = m if m <= FULL_SWEEP_LIMIT else min(m, n + 1)
    table = _rational_rank_table(a, upto)
    for idx, expected in table.items():
        sub = [rows[i] for i in idx]
        if linalg.ranks_mod(sub, q) != expected:
            return False
    return True


def _coords_of(point, q: int) -> tuple[int, ...]:
    if isinstance(point, FqPoint):
        if point.q != q:
            raise InputError(f"point modulus {point.q} does not match arrangement modulus {q}")
        return point.coords
    return tuple(int(c) % q for c in point)


def h_count(red: ReducedArrangement, point) -> int:
    """Number of reduced hyperplanes the point lies on."""
    q = red.q
    y = _coords_of(point, q)
    if len(y) != red.dim:
        raise InputError("point dimension does not match arrangement dimension")
    h = 0
    for row in red.rows:
        s = 0
        for c, x in zip(row, y):
            s += c * x
        if s % q == row[-1]:
            h += 1
    return h


def _slab_histogram(rows, q: int, n: int, v: int) -> Counter:
    """Histogram of h over the slab x_1 = v (coordinates 2..n free)."""
    size = q ** (n - 1)
    h = [0] * size
    for row in rows:
        b = row[n]
        cs = row[:n]
        piv = next((j for j in range(n - 1, 0, -1) if cs[j]), None)
        if piv is None:
            if (cs[0] * v) % q == b:
                h = [x + 1 for x in h]
            continue
        inv = pow(cs[piv], -1, q)
        rhs0 = (b - cs[0] * v) % q
        free = [j for j in range(1, n) if j != piv]
        cfree = [cs[j] for j in free]
        wfree = [q ** (n - 1 - j) for j in free]
        wpiv = q ** (n - 1 - piv)
        for assign in product(range(q), repeat=len(free)):
            s = rhs0
            idx = 0
            for x, c, w in zip(assign, cfree, wfree):
                s -= c * x
                idx += w * x
            h[idx + wpiv * ((s * inv) % q)] += 1
    return Counter(h)


def _slab_worker(args):
    return _slab_histogram(*args)


@lru_cache(maxsize=None)
def _histogram_cached(red: ReducedArrangement) -> Counter:
    return point_histogram(red)


def point_histogram(red: ReducedArrangement, jobs: int = 1) -> Counter:
    """Counter mapping h-value -> number of points of F_q^n attaining it.

    Independent of enumeration order; slab results merge by addition, so a
    parallel run is bit-identical to the sequential one.
    """
    q, n = red.q, red.dim
    if n == 0:
        return Counter({0: 1})
    tasks = [(red.rows, q, n, v) for v in range(q)]
    total: Counter = Counter()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_slab_worker, tasks):
                total += part
    else:
        for t in tasks:
            total += _slab_histogram(*t)
    return total


def histogram_direct(red: ReducedArrangement) -> Counter:
    """Per-point oracle for the sweep above: test every point against every
    hyperplane.  Kept deliberately naive."""
    hist: Counter = Counter()
    for point in product(range(red.q), repeat=red.dim):
        hist[h_count(red, point)] += 1
    return hist


def unipoly_from_counts(counts: dict, q: int, power: int, what: str) -> UniPoly:
    """Build sum(counts[h] t^h) / q^power, demanding exact divisibility."""
    if power < 0:
        raise IntegrityAlarm(f"negative power of {q} dividing {what}")
    div = q**power
    coeffs = [0] * (max(counts, default=0) + 1)
    for h, c in counts.items():
        if c % div:
            raise IntegrityAlarm(
                f"{what}: coefficient {c} of t^{h} is not divisible by {q}^{power}")
        coeffs[h] = Fraction(c // div)
    return UniPoly("t", coeffs)


def coboundary_at_prime(a: Arrangement, q: int, jobs: int = 1, unsafe: bool = False) -> UniPoly:
    """Coboundary polynomial evaluated at this q, as an exact polynomial in t."""
    if not unsafe and not certify_prime(a, q):
        raise CertificationError(f"prime {q} failed certification for this arrangement")
    red = ReducedArrangement(a, q)
    hist = point_histogram(red, jobs) if jobs > 1 else _histogram_cached(red)
    return unipoly_from_counts(hist, q, a.dim - a.rank, "point-count sum")


def characteristic_at_prime(a: Arrangement, q: int, jobs: int = 1, unsafe: bool = False) -> int:
    """Number of points of F_q^n lying on no hyperplane."""
    cb = coboundary_at_prime(a, q, jobs=jobs, unsafe=unsafe)
    red = ReducedArrangement(a, q)
    hist = _histogram_cached(red) if jobs <= 1 else point_histogram(red, jobs)
    count = hist.get(0, 0)
    expected = q ** (a.dim - a.rank) * cb(0)
    if count != expected:
        raise IntegrityAlarm(
            f"off-arrangement point count {count} does not match q^(n-r) * cb(0) = {expected}")
    return count
