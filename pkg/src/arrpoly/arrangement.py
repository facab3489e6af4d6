"""Rational hyperplane arrangements with exact arithmetic.

A hyperplane ``a_1 x_1 + ... + a_n x_n = b`` is stored in canonical form,
scaled so its first nonzero coefficient is +1.  Two equations differing by a
nonzero rational factor therefore construct equal objects, which makes
deduplication, orbit enumeration and symmetry checks pure structural
comparisons.

The rank of a set of hyperplanes is the matroid rank: for a central set it
is the rank of the coefficient matrix, and for a noncentral set the maximum
rank over its central subsets.  The latter equals the rank of the augmented
matrix minus one; the brute-force maximum stays around as a test oracle.
All decisions here are discrete, so every computation is exact and nothing
uses floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import permutations

from . import linalg
from .errors import InputError

Permutation = tuple[int, ...]  # images of 0..n-1


@dataclass(frozen=True)
class Hyperplane:
    """An affine hyperplane, always held in canonical (leading +1) form."""

    coeffs: tuple[Fraction, ...]
    rhs: Fraction

    def __init__(self, coeffs, rhs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        rhs = Fraction(rhs)
        lead = next((c for c in coeffs if c != 0), None)
        if lead is None:
            raise InputError("all-zero coefficient vector is not a hyperplane")
        if lead != 1:
            coeffs = tuple(c / lead for c in coeffs)
            rhs = rhs / lead
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "rhs", rhs)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    @cached_property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c != 0)

    @cached_property
    def int_row(self) -> tuple[int, ...]:
        """The equation scaled to coprime integers (a_1, ..., a_n, b)."""
        return linalg.primitive_int_row(self.coeffs, self.rhs)

    def sort_key(self):
        return (self.coeffs, self.rhs)

    def __str__(self) -> str:
        parts = []
        for i in self.support:
            c = self.coeffs[i]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            term = f"x{i + 1}" if mag == 1 else f"{mag}x{i + 1}"
            parts.append(f"{sign} {term}" if parts else (f"-{term}" if sign == "-" else term))
        return f"{' '.join(parts)} = {self.rhs}"


def canonicalize(coeffs, rhs) -> Hyperplane:
    """Build the unique scaled representative of an affine equation."""
    return Hyperplane(coeffs, rhs)


def act(sigma: Permutation, h: Hyperplane) -> Hyperplane:
    """Move coefficient a_i onto variable x_{sigma(i)}; result is canonical."""
    n = h.dim
    if len(sigma) != n:
        raise InputError(f"permutation of length {len(sigma)} on a hyperplane in R^{n}")
    if sorted(sigma) != list(range(n)):
        raise InputError("not a permutation of 0..n-1")
    coeffs = [Fraction(0)] * n
    for i, c in enumerate(h.coeffs):
        coeffs[sigma[i]] = c
    return Hyperplane(coeffs, h.rhs)


def orbit(h: Hyperplane) -> frozenset[Hyperplane]:
    """All images of h under coordinate permutations, as a deduplicated set.

    Only injective placements of the support are enumerated; positions with
    zero coefficient never matter, so the loop is polynomial in the ambient
    dimension rather than factorial.
    """
    n = h.dim
    vals = [h.coeffs[i] for i in h.support]
    zero = Fraction(0)
    out = set()
    for places in permutations(range(n), len(vals)):
        coeffs = [zero] * n
        for pos, v in zip(places, vals):
            coeffs[pos] = v
        out.add(Hyperplane(coeffs, h.rhs))
    return frozenset(out)


@dataclass(frozen=True)
class Arrangement:
    """A deduplicated, ordered set of hyperplanes in fixed ambient dimension."""

    dim: int
    hyperplanes: tuple[Hyperplane, ...]
    rank: int = field(init=False)

    def __init__(self, dim: int, hyperplanes=()):
        if dim < 0:
            raise InputError("ambient dimension must be nonnegative")
        seen = []
        for h in hyperplanes:
            if h.dim != dim:
                raise InputError(f"hyperplane in R^{h.dim} inside an arrangement in R^{dim}")
            if h not in seen:
                seen.append(h)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "hyperplanes", tuple(seen))
        object.__setattr__(self, "rank", _rank_of_rows([h.int_row for h in seen]))

    def __eq__(self, other):
        # arrangements are sets; the stored order is only presentation
        if not isinstance(other, Arrangement):
            return NotImplemented
        return self.dim == other.dim and set(self.hyperplanes) == set(other.hyperplanes)

    def __hash__(self):
        return hash((self.dim, frozenset(self.hyperplanes)))

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def __iter__(self):
        return iter(self.hyperplanes)

    def __contains__(self, h: Hyperplane) -> bool:
        return h in self.hyperplanes

    def int_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(h.int_row for h in self.hyperplanes)

    def subarrangement(self, members) -> "Subarrangement":
        return Subarrangement(self, tuple(members))

    def full(self) -> "Subarrangement":
        return Subarrangement(self, tuple(range(len(self.hyperplanes))))

    @classmethod
    def from_rows(cls, dim: int, rows) -> "Arrangement":
        return cls(dim, [Hyperplane(r[:dim], r[dim]) for r in rows])


@dataclass(frozen=True)
class Subarrangement:
    """An index set into a parent arrangement's hyperplane list."""

    parent: Arrangement
    members: tuple[int, ...]

    def __post_init__(self):
        m = len(self.parent.hyperplanes)
        prev = -1
        for i in self.members:
            if not (0 <= i < m) or i <= prev:
                raise InputError("members must be strictly increasing valid indices")
            prev = i

    def hyperplanes(self) -> tuple[Hyperplane, ...]:
        return tuple(self.parent.hyperplanes[i] for i in self.members)

    def int_rows(self) -> list[tuple[int, ...]]:
        return [self.parent.hyperplanes[i].int_row for i in self.members]

    def __len__(self) -> int:
        return len(self.members)


def _rows_of(b) -> list[tuple[int, ...]]:
    if isinstance(b, Subarrangement):
        return b.int_rows()
    if isinstance(b, Arrangement):
        return list(b.int_rows())
    return [h.int_row for h in b]


def is_central(b) -> bool:
    """True iff the hyperplanes have a common point (empty set counts as central)."""
    rows = _rows_of(b)
    if not rows:
        return True
    coeff, aug = linalg.ranks(rows)
    return coeff == aug


def _rank_of_rows(rows) -> int:
    if not rows:
        return 0
    coeff, aug = linalg.ranks(rows)
    return coeff if coeff == aug else aug - 1


def rank_of(b) -> int:
    """Matroid rank: rank of the coefficient matrix for central sets, the
    maximum over central subsets otherwise (= augmented rank minus one)."""
    return _rank_of_rows(_rows_of(b))


def act_arrangement(sigma: Permutation, a: Arrangement) -> Arrangement:
    return Arrangement(a.dim, [act(sigma, h) for h in a.hyperplanes])


def is_symmetric(a: Arrangement) -> bool:
    """True iff the arrangement is a union of full coordinate-permutation orbits."""
    remaining = set(a.hyperplanes)
    while remaining:
        h = next(iter(remaining))
        orb = orbit(h)
        if not orb <= remaining:
            return False
        remaining -= orb
    return True
