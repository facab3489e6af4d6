"""Closed-form coboundary engine for symmetric arrangements.

A symmetric arrangement is a union of full coordinate-permutation orbits,
so it is determined by one representative equation per orbit.  Working mod
a prime q, the number of orbit hyperplanes through a point y can be read
off the solutions of the representative equation: a solution pattern x fits
into y once per way of choosing, for every residue k occurring o_k(x)
times in x, o_k(x) of the coordinates of y equal to k.  Summing the
resulting binomial products over all (stabilizer-inequivalent) solutions
gives h(y), and grouping points of F_q^n by their residue multiplicities
turns the t^h(y) sum into a single sum over weak compositions of n into q
parts, one term per composition, weighted by a multinomial coefficient.

That counting step silently assumes coordinates holding equal values are
interchangeable under the equation's stabilizer.  This holds for every
family built here but is not automatic, so the engine cross-checks its
pattern count against direct point counting before computing and refuses,
with a diagnostic, any arrangement where the two diverge.

Certification here is structural: the expanded arrangement must keep all
hyperplanes distinct mod q and the cross-check above must pass.  Agreement
with the rational coboundary additionally needs a good-reduction prime,
which is the finite-field engine's certification; at a structurally sound
but combinatorially bad prime this engine still returns the mod-q truth
(equal to the point-count engine's output), which is exactly what the
generating-function identities consume.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import permutations, product
from math import comb

from .arrangement import Arrangement, Hyperplane, orbit
from .errors import CertificationError, InputError, PatternDivergenceError, SymmetryError
from .fq_engine import ReducedArrangement, h_count, is_prime, unipoly_from_counts
from .polynomials import UniPoly

Permutation = tuple[int, ...]

CROSSCHECK_EXHAUSTIVE_LIMIT = 4096  # cross-check every point when q^n is at most this
CROSSCHECK_SAMPLE = 200


@dataclass(frozen=True)
class RepresentativeEquation:
    """A linear equation on an initial segment of variables, all of whose
    coefficients are nonzero; its orbit generates one orbit of hyperplanes."""

    coeffs: tuple[Fraction, ...]
    rhs: Fraction

    def __init__(self, coeffs, rhs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        rhs = Fraction(rhs)
        if not coeffs:
            raise InputError("representative equation needs at least one variable")
        if any(c == 0 for c in coeffs):
            raise InputError("representative equation coefficients must all be nonzero")
        lead = coeffs[0]
        if lead != 1:
            coeffs = tuple(c / lead for c in coeffs)
            rhs = rhs / lead
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "rhs", rhs)

    @property
    def arity(self) -> int:
        return len(self.coeffs)

    def embed(self, n: int) -> Hyperplane:
        if n < self.arity:
            raise InputError(f"arity {self.arity} does not fit in dimension {n}")
        return Hyperplane(self.coeffs + (Fraction(0),) * (n - self.arity), self.rhs)

    def sort_key(self):
        return (self.arity, self.coeffs, self.rhs)

    def __str__(self) -> str:
        return str(self.embed(self.arity))


def _permute(p: Permutation, x: tuple) -> tuple:
    out = [None] * len(x)
    for i, v in enumerate(x):
        out[p[i]] = v
    return tuple(out)


def _compose(p1: Permutation, p2: Permutation) -> Permutation:
    return tuple(p1[p2[i]] for i in range(len(p1)))


@dataclass(frozen=True)
class Stabilizer:
    """Variable permutations fixing an equation's hyperplane up to scaling."""

    perms: tuple[Permutation, ...]

    def __post_init__(self):
        group = set(self.perms)
        n = len(self.perms[0]) if self.perms else 0
        if tuple(range(n)) not in group:
            raise InputError("stabilizer must contain the identity")
        for p1 in group:
            for p2 in group:
                if _compose(p1, p2) not in group:
                    raise InputError("stabilizer is not closed under composition")

    def __len__(self) -> int:
        return len(self.perms)

    def orbit_of(self, x: tuple) -> frozenset:
        return frozenset(_permute(p, x) for p in self.perms)

    @classmethod
    def of_equation(cls, e: RepresentativeEquation) -> "Stabilizer":
        j = e.arity
        target = (e.coeffs, e.rhs)
        perms = []
        for p in permutations(range(j)):
            c2 = _permute(p, e.coeffs)
            lead = c2[0]
            if (tuple(c / lead for c in c2), e.rhs / lead) == target:
                perms.append(p)
        return cls(tuple(perms))


@dataclass(frozen=True)
class CanonicalSolution:
    """A stabilizer orbit of solutions, held by its lexicographically least
    member, with the residue multiset it occupies."""

    values: tuple[int, ...]
    orbit_size: int
    occurrences: tuple[tuple[int, int], ...]  # (residue, multiplicity), sorted

    @cached_property
    def support(self) -> frozenset[int]:
        return frozenset(k for k, _ in self.occurrences)


def _occurrences(values: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    out: dict[int, int] = {}
    for v in values:
        out[v] = out.get(v, 0) + 1
    return tuple(sorted(out.items()))


def _reduce_fraction(c: Fraction, q: int) -> int:
    den = c.denominator % q
    if den == 0:
        raise CertificationError(
            f"denominator of {c} is not invertible mod {q}", module="symmetric-engine")
    return (c.numerator % q) * pow(den, -1, q) % q


@lru_cache(maxsize=None)
def solutions_mod_q(e: RepresentativeEquation, q: int) -> tuple[CanonicalSolution, ...]:
    """All solutions of the reduced equation in F_q^arity, quotiented by the
    stabilizer action, each orbit reported by its lex-least member."""
    if not is_prime(q):
        raise InputError(f"{q} is not prime")
    coeffs = [_reduce_fraction(c, q) for c in e.coeffs]
    rhs = _reduce_fraction(e.rhs, q)
    if any(c == 0 for c in coeffs):
        raise CertificationError(
            f"a coefficient of {e} vanishes mod {q}", module="symmetric-engine")
    j = e.arity
    inv_last = pow(coeffs[-1], -1, q)
    ordered = []
    for assign in product(range(q), repeat=j - 1):
        s = rhs
        for c, x in zip(coeffs, assign):
            s -= c * x
        ordered.append(assign + ((s * inv_last) % q,))
    stab = Stabilizer.of_equation(e)
    seen = set()
    out = []
    for sol in sorted(ordered):
        if sol in seen:
            continue
        orb = stab.orbit_of(sol)
        seen |= orb
        rep = min(orb)
        out.append(CanonicalSolution(rep, len(orb), _occurrences(rep)))
    return tuple(out)


def h_symbolic(equations, q: int, point) -> int:
    """Hyperplanes through a point, counted from solution patterns alone:
    sum over solutions x of prod over residues k in x of
    C(#coordinates of the point equal to k, multiplicity of k in x)."""
    coords = point.coords if hasattr(point, "coords") else tuple(int(c) % q for c in point)
    counts: dict[int, int] = {}
    for v in coords:
        counts[v] = counts.get(v, 0) + 1
    total = 0
    for e in equations:
        for sol in solutions_mod_q(e, q):
            p = 1
            for k, o in sol.occurrences:
                p *= comb(counts.get(k, 0), o)
                if p == 0:
                    break
            total += p
    return total


@dataclass(frozen=True)
class SolutionPartition:
    """Coarsest partition of the solutions into blocks with pairwise disjoint
    residue supports; blocks are connected under shared support."""

    blocks: tuple[tuple[CanonicalSolution, ...], ...]

    def __post_init__(self):
        sups = [frozenset().union(*(s.support for s in b)) for b in self.blocks]
        for i in range(len(sups)):
            for j in range(i + 1, len(sups)):
                if sups[i] & sups[j]:
                    raise InputError("blocks must have pairwise disjoint supports")
        for block in self.blocks:
            pending = list(block[1:])
            reached = set(block[0].support)
            while pending:
                nxt = [s for s in pending if s.support & reached]
                if not nxt:
                    raise InputError("block is not connected under shared support")
                for s in nxt:
                    reached |= s.support
                    pending.remove(s)

    @cached_property
    def supports(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset().union(*(s.support for s in b)) for b in self.blocks)

    def all_solutions(self) -> tuple[CanonicalSolution, ...]:
        return tuple(s for b in self.blocks for s in b)


def partition_solutions(solutions) -> SolutionPartition:
    """Union-find over residues, seeded by each solution's support."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for sol in solutions:
        ks = sorted(sol.support)
        for k in ks:
            parent.setdefault(k, k)
        for k in ks[1:]:
            parent[find(ks[0])] = find(k)
    groups: dict[int, list[CanonicalSolution]] = {}
    for sol in solutions:
        root = find(min(sol.support))
        groups.setdefault(root, []).append(sol)
    blocks = [tuple(sorted(g, key=lambda s: (s.values, s.occurrences))) for g in groups.values()]
    blocks.sort(key=lambda b: min(min(s.support) for s in b))
    return SolutionPartition(tuple(blocks))


def _canonical_representative(orb) -> RepresentativeEquation:
    h = next(iter(orb))
    vals = tuple(h.coeffs[i] for i in h.support)
    best = None
    for p in permutations(range(len(vals))):
        c2 = _permute(p, vals)
        lead = c2[0]
        cand = (tuple(c / lead for c in c2), h.rhs / lead)
        if best is None or cand < best:
            best = cand
    return RepresentativeEquation(*best)


def extract_representatives(a: Arrangement) -> tuple[RepresentativeEquation, ...]:
    """Split a symmetric arrangement into orbits and return one canonical
    equation per orbit, variables compressed to an initial segment."""
    remaining = set(a.hyperplanes)
    have = set(a.hyperplanes)
    reps = []
    while remaining:
        h = min(remaining, key=lambda x: x.sort_key())
        orb = orbit(h)
        missing = orb - have
        if missing:
            raise SymmetryError(
                f"not symmetric: orbit of ({h}) has {len(orb)} members, "
                f"{len(missing)} missing (e.g. {min(missing, key=lambda x: x.sort_key())})")
        remaining -= orb
        reps.append(_canonical_representative(orb))
    return tuple(sorted(reps, key=lambda e: e.sort_key()))


def expand(equations, n: int) -> Arrangement:
    """Union of the orbits of the given equations inside R^n."""
    hyperplanes = []
    for e in equations:
        hyperplanes.extend(sorted(orbit(e.embed(n)), key=lambda h: h.sort_key()))
    return Arrangement(n, hyperplanes)


def certify_closed_form(a: Arrangement, q: int) -> tuple[RepresentativeEquation, ...]:
    """Structural certification for the closed form.

    Checks that the arrangement is symmetric, reduces mod q without
    collisions, and that pattern counting agrees with direct counting on a
    deterministic sample of points (all points when q^n is small).  Returns
    the representatives so callers need not recompute them.
    """
    reps = extract_representatives(a)
    red = ReducedArrangement(a, q)  # raises CertificationError on collision
    n = a.dim
    if n == 0:
        return reps
    if q**n <= CROSSCHECK_EXHAUSTIVE_LIMIT:
        points = product(range(q), repeat=n)
    else:
        rng = random.Random(q * 1_000_003 + n * 101 + len(a))
        points = (tuple(rng.randrange(q) for _ in range(n)) for _ in range(CROSSCHECK_SAMPLE))
    for y in points:
        hs, hc = h_symbolic(reps, q, y), h_count(red, y)
        if hs != hc:
            raise PatternDivergenceError(
                f"pattern count {hs} != direct count {hc} at point {y} mod {q}; "
                "coordinates sharing a value are not stabilizer-interchangeable "
                "for this arrangement, so the closed form does not apply")
    return reps


def weak_compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def multinomial(parts) -> int:
    total, out = 0, 1
    for p in parts:
        total += p
        out *= comb(total, p)
    return out


def composition_exponent(solutions, comp) -> int:
    """Exponent of t contributed by one residue-multiplicity class: a plain
    sum over all solutions, block structure notwithstanding."""
    e = 0
    for sol in solutions:
        p = 1
        for k, o in sol.occurrences:
            p *= comb(comp[k], o)
            if p == 0:
                break
        e += p
    return e


@lru_cache(maxsize=None)
def coboundary_closed_form(a: Arrangement, q: int) -> UniPoly:
    """Coboundary polynomial at q via the orbit-counting closed form:
    q^(rank - n) * sum over weak compositions (a_0..a_{q-1}) of n of
    multinomial(n; a) * t^(sum over solutions of prod C(a_k, o_k))."""
    reps = certify_closed_form(a, q)
    sols = [s for e in reps for s in solutions_mod_q(e, q)]
    partition_solutions(sols)  # construct and validate the block structure
    counts: dict[int, int] = {}
    for comp in weak_compositions(a.dim, q):
        e = composition_exponent(sols, comp)
        counts[e] = counts.get(e, 0) + multinomial(comp)
    return unipoly_from_counts(counts, q, a.dim - a.rank, "composition sum")
