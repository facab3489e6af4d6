"""Truncated exponential generating functions over t-polynomials.

A series is stored by its coefficients u_0..u_N in the z^n/n! convention,
each a polynomial in t; the product rule is binomial convolution.  The sum
over weak compositions defining a symmetric family's coboundary at a fixed
prime factors block-by-block over the solution partition, one factor per
block (residues touched by no solution contribute plain e^z factors), which
is what ``family_egf`` builds.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable

from .errors import InputError
from .families import MIN_DIMENSION, build_family, family_representatives
from .polynomials import UniPoly
from .symmetric_engine import (
    certify_closed_form,
    multinomial,
    partition_solutions,
    solutions_mod_q,
    weak_compositions,
)


def _as_tpoly(v) -> UniPoly:
    if isinstance(v, UniPoly):
        if v.var != "t":
            raise InputError(f"series coefficients must be polynomials in t, got {v.var!r}",
                             module="egf")
        return v
    return UniPoly.constant("t", v)


@dataclass(frozen=True)
class TruncatedEGF:
    """Formal power series sum u_n z^n/n!, truncated at a fixed order."""

    order: int
    coeffs: tuple[UniPoly, ...]

    def __init__(self, coeffs):
        coeffs = tuple(_as_tpoly(c) for c in coeffs)
        if not coeffs:
            raise InputError("a truncated series needs at least the order-0 coefficient",
                             module="egf")
        object.__setattr__(self, "order", len(coeffs) - 1)
        object.__setattr__(self, "coeffs", coeffs)

    def __getitem__(self, n: int) -> UniPoly:
        return self.coeffs[n]

    def __mul__(self, other: "TruncatedEGF") -> "TruncatedEGF":
        return egf_mul(self, other)

    @classmethod
    def one(cls, order: int) -> "TruncatedEGF":
        return cls([1] + [0] * order)

    @classmethod
    def from_function(cls, order: int, f: Callable[[int], UniPoly]) -> "TruncatedEGF":
        return cls([f(n) for n in range(order + 1)])


def exp_series(order: int) -> TruncatedEGF:
    """e^z: every coefficient is 1."""
    return TruncatedEGF([1] * (order + 1))


def egf_mul(u: TruncatedEGF, v: TruncatedEGF) -> TruncatedEGF:
    """Binomial convolution: w_n = sum C(n,k) u_k v_{n-k}."""
    if u.order != v.order:
        raise InputError(f"order mismatch: {u.order} vs {v.order}", module="egf")
    out = []
    for n in range(u.order + 1):
        acc = UniPoly("t")
        for k in range(n + 1):
            acc = acc + comb(n, k) * (u.coeffs[k] * v.coeffs[n - k])
        out.append(acc)
    return TruncatedEGF(out)


def egf_power(u: TruncatedEGF, k: int) -> TruncatedEGF:
    out = TruncatedEGF.one(u.order)
    for _ in range(k):
        out = egf_mul(out, u)
    return out


@dataclass(frozen=True)
class ConvolutionBlock:
    """One factor of a multi-index convolution: `arity` summation variables
    and the t-exponent their composition contributes."""

    arity: int
    exponent: Callable[[tuple[int, ...]], int]


def block_series(block: ConvolutionBlock, order: int) -> TruncatedEGF:
    """v_n = sum over compositions of n into `arity` parts of
    multinomial(n; parts) t^exponent(parts)."""
    out = []
    for n in range(order + 1):
        acc: dict[int, int] = {}
        for comp in weak_compositions(n, block.arity):
            e = block.exponent(comp)
            acc[e] = acc.get(e, 0) + multinomial(comp)
        coeffs = [0] * (max(acc, default=0) + 1)
        for e, c in acc.items():
            coeffs[e] = c
        out.append(UniPoly("t", coeffs))
    return TruncatedEGF(out)


def generalized_convolution_check(blocks, order: int, combined_exponent=None) -> bool:
    """Verify that the direct multi-index sum factors as the product of the
    per-block series, coefficientwise up to the given order.

    ``combined_exponent`` defaults to the sum of the block exponents on the
    split composition; passing anything else is the negative control.
    """
    blocks = tuple(blocks)
    arities = [b.arity for b in blocks]
    total = sum(arities)

    def split(comp):
        parts, at = [], 0
        for a in arities:
            parts.append(comp[at:at + a])
            at += a
        return parts

    if combined_exponent is None:
        def combined_exponent(comp):
            return sum(b.exponent(p) for b, p in zip(blocks, split(comp)))

    direct = []
    for n in range(order + 1):
        acc: dict[int, int] = {}
        for comp in weak_compositions(n, total):
            e = combined_exponent(comp)
            acc[e] = acc.get(e, 0) + multinomial(comp)
        coeffs = [0] * (max(acc, default=0) + 1)
        for e, c in acc.items():
            coeffs[e] = c
        direct.append(UniPoly("t", coeffs))

    product = TruncatedEGF.one(order)
    for b in blocks:
        product = egf_mul(product, block_series(b, order))
    return TruncatedEGF(direct) == product


@lru_cache(maxsize=None)
def _certified_family(name: str, q: int, n: int) -> bool:
    certify_closed_form(build_family(name, n), q)
    return True


def family_egf(family: str, q: int, order: int = 8) -> TruncatedEGF:
    """The factorized series for a family at a fixed prime: one factor per
    solution block, times e^z per untouched residue.

    Coefficient u_n equals q^(n - rank) times the family's closed-form
    coboundary at q for every n >= 2 (the low-order coefficients u_0 = 1
    and u_1 = q are the usual subtracted offsets).
    """
    reps = family_representatives(family)
    for n in range(MIN_DIMENSION, max(order, MIN_DIMENSION) + 1):
        _certified_family(family, q, n)
    sols = [s for e in reps for s in solutions_mod_q(e, q)]
    partition = partition_solutions(sols)
    out = TruncatedEGF.one(order)
    covered = 0
    for block, support in zip(partition.blocks, partition.supports):
        residues = sorted(support)
        position = {k: i for i, k in enumerate(residues)}
        covered += len(residues)

        def exponent(comp, block=block, position=position):
            total = 0
            for sol in block:
                p = 1
                for k, o in sol.occurrences:
                    p *= comb(comp[position[k]], o)
                    if p == 0:
                        break
                total += p
            return total

        out = egf_mul(out, block_series(ConvolutionBlock(len(residues), exponent), order))
    for _ in range(q - covered):
        out = egf_mul(out, exp_series(order))
    return out
