"""Exact row-reduction helpers over the rationals and over prime fields.

A row ``(a_1, ..., a_n, b)`` stands for the affine equation
``a_1 x_1 + ... + a_n x_n = b``.  Rational rows are scaled once to primitive
integer vectors so that all elimination afterwards runs on plain Python ints
(fraction-free, with a gcd pass per inserted row to keep entries small).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Row = tuple[int, ...]


def primitive_int_row(coeffs, rhs) -> Row:
    """Scale ``(coeffs | rhs)`` to coprime integers, first nonzero entry positive."""
    vals = [Fraction(c) for c in coeffs] + [Fraction(rhs)]
    mult = 1
    for v in vals:
        mult = mult * v.denominator // gcd(mult, v.denominator)
    ints = [int(v * mult) for v in vals]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    lead = next((v for v in ints if v), 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def _reduce(row: list[int], basis: list[tuple[int, list[int]]]) -> list[int]:
    # basis is kept sorted by pivot column; fraction-free combination
    for p, b in basis:
        if row[p]:
            f, g = row[p], b[p]
            row = [ri * g - bi * f for ri, bi in zip(row, b)]
    return row


def _normalize(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        g = gcd(g, v)
    if g > 1:
        row = [v // g for v in row]
    lead = next((v for v in row if v), 0)
    if lead < 0:
        row = [-v for v in row]
    return row


def ranks(rows) -> tuple[int, int]:
    """(coefficient rank, augmented rank) of an integer row system.

    The system is consistent (central) iff the two agree.
    """
    basis: list[tuple[int, list[int]]] = []
    coeff_rank = aug_rank = 0
    for row in rows:
        r = _reduce(list(row), basis)
        p = next((i for i, v in enumerate(r) if v), None)
        if p is None:
            continue
        basis.append((p, _normalize(r)))
        basis.sort(key=lambda e: e[0])
        aug_rank += 1
        if p < len(r) - 1:
            coeff_rank += 1
    return coeff_rank, aug_rank


def central_rank(rows) -> int | None:
    """Rank of a consistent system, or None as soon as inconsistency shows up."""
    basis: list[tuple[int, list[int]]] = []
    rank = 0
    for row in rows:
        r = _reduce(list(row), basis)
        p = next((i for i, v in enumerate(r) if v), None)
        if p is None:
            continue
        if p == len(r) - 1:
            return None
        basis.append((p, _normalize(r)))
        basis.sort(key=lambda e: e[0])
        rank += 1
    return rank


def ranks_mod(rows, q: int) -> tuple[int, int]:
    """(coefficient rank, augmented rank) of the system reduced modulo prime q."""
    basis: list[tuple[int, list[int]]] = []
    coeff_rank = aug_rank = 0
    for row in rows:
        r = [v % q for v in row]
        for p, b in basis:
            if r[p]:
                f = r[p]
                r = [(ri - bi * f) % q for ri, bi in zip(r, b)]
        p = next((i for i, v in enumerate(r) if v), None)
        if p is None:
            continue
        inv = pow(r[p], -1, q)
        basis.append((p, [(v * inv) % q for v in r]))
        basis.sort(key=lambda e: e[0])
        aug_rank += 1
        if p < len(r) - 1:
            coeff_rank += 1
    return coeff_rank, aug_rank


def row_mod(row: Row, q: int) -> Row:
    return tuple(v % q for v in row)


def canonical_row_mod(row: Row, q: int) -> Row | None:
    """Reduce mod q and scale so the first nonzero coefficient is 1.

    Returns None when every coefficient vanishes mod q (the row no longer
    defines a hyperplane over F_q).
    """
    r = [v % q for v in row]
    p = next((i for i, v in enumerate(r[:-1]) if v), None)
    if p is None:
        return None
    inv = pow(r[p], -1, q)
    return tuple((v * inv) % q for v in r)
