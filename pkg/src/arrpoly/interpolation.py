"""Symbolic reconstruction from per-prime evaluations.

The coboundary polynomial has q-degree at most the arrangement's rank, so
rank+1 certified primes determine each t-coefficient by Lagrange
interpolation; the characteristic polynomial is monic of degree n and needs
n+1 primes.  Everything runs in exact rational arithmetic and the results
must come out integral, reproduce the inputs, and (for the characteristic
polynomial) be monic; each failed check is an integrity alarm, not a
tolerance issue.
"""

from __future__ import annotations

from fractions import Fraction

from .arrangement import Arrangement
from .errors import CertificationError, InputError, IntegrityAlarm
from .fq_engine import certify_prime, characteristic_at_prime, coboundary_at_prime
from .polynomials import BiPoly, UniPoly

_SEARCH_LIMIT = 10_000


def lagrange_interpolate(points, var: str) -> UniPoly:
    """Exact polynomial through the given (x, y) pairs (distinct x)."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise InputError("interpolation nodes must be distinct", module="q-interpolation")
    acc = UniPoly(var)
    for i, (xi, yi) in enumerate(points):
        xi, yi = Fraction(xi), Fraction(yi)
        basis = UniPoly.constant(var, 1)
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if i != j:
                basis = basis * UniPoly(var, (-Fraction(xj), 1))
                denom *= xi - Fraction(xj)
        acc = acc + basis * (yi / denom)
    return acc


def default_primes(a: Arrangement, count: int, start: int = 5) -> tuple[int, ...]:
    """The `count` smallest certified primes >= start."""
    out = []
    q = start
    while len(out) < count:
        if q > _SEARCH_LIMIT:
            raise CertificationError(
                f"could not find {count} certified primes below {_SEARCH_LIMIT}")
        d = 2
        while d * d <= q:
            if q % d == 0:
                break
            d += 1
        else:
            if q >= 2 and certify_prime(a, q):
                out.append(q)
        q += 1
    return tuple(out)


def _checked_primes(a: Arrangement, primes, minimum: int) -> tuple[int, ...]:
    if primes is None:
        return default_primes(a, minimum)
    primes = tuple(primes)
    if len(set(primes)) != len(primes):
        raise InputError("primes must be pairwise distinct", module="q-interpolation")
    if len(primes) < minimum:
        raise InputError(
            f"need at least {minimum} primes, got {len(primes)}", module="q-interpolation")
    for q in primes:
        if not certify_prime(a, q):
            raise CertificationError(f"prime {q} failed certification")
    return primes


def recover_coboundary(a: Arrangement, primes=None, jobs: int = 1) -> BiPoly:
    """The coboundary polynomial as a genuine bivariate polynomial in (q, t),
    interpolated from evaluations at certified primes."""
    primes = _checked_primes(a, primes, a.rank + 1)
    per_prime = {q: coboundary_at_prime(a, q, jobs=jobs) for q in primes}
    tmax = max((p.degree for p in per_prime.values()), default=-1)
    terms: dict[tuple[int, int], Fraction] = {}
    for j in range(tmax + 1):
        pts = [(q, per_prime[q].coeff(j)) for q in primes]
        coeff_poly = lagrange_interpolate(pts, "q")
        for i, c in enumerate(coeff_poly.coeffs):
            if c.denominator != 1:
                raise IntegrityAlarm(
                    f"interpolated coefficient of q^{i} t^{j} is {c}, not an integer",
                    module="q-interpolation")
            if c:
                terms[(i, j)] = c
    result = BiPoly(("q", "t"), terms)
    for q in primes:
        if result.substitute(0, q) != per_prime[q]:
            raise IntegrityAlarm(
                f"recovered polynomial does not reproduce the value at q={q}",
                module="q-interpolation")
    return result


def recover_characteristic(a: Arrangement, primes=None, jobs: int = 1) -> UniPoly:
    """The characteristic polynomial in q, interpolated from point counts."""
    primes = _checked_primes(a, primes, a.dim + 1)
    pts = [(q, characteristic_at_prime(a, q, jobs=jobs)) for q in primes]
    chi = lagrange_interpolate(pts, "q")
    if not chi.is_integer():
        raise IntegrityAlarm("interpolated characteristic polynomial is not integral",
                             module="q-interpolation")
    if chi.degree != a.dim or chi.coeffs[-1] != 1:
        raise IntegrityAlarm(
            f"characteristic polynomial should be monic of degree {a.dim}, got {chi}",
            module="q-interpolation")
    for q, v in pts:
        if chi(q) != v:
            raise IntegrityAlarm(
                f"recovered characteristic polynomial does not reproduce the count at q={q}",
                module="q-interpolation")
    return chi
