"""Exact uni/bivariate polynomial arithmetic and the specialization maps
between the Tutte, coboundary and characteristic polynomials.

Coefficients are rationals even though the final invariants are integer
polynomials: the conversions below pass through exact divisions (by powers
of ``y - 1`` and of ``q``), and a nonzero remainder in those divisions is a
valuable integrity alarm rather than something to round away.

Variable labels are part of each value: adding or multiplying polynomials
with different labels is an error, which keeps the (q,t)- and (x,y)-worlds
from being confused silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IntegrityAlarm, InputError, ToolkitError

Exp2 = tuple[int, int]


class PolynomialError(ToolkitError, ValueError):
    module = "exact-poly"


def _coeff_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _term_text(exps: tuple[int, ...], coeff: Fraction, names: tuple[str, ...]) -> str:
    body = ""
    for name, e in zip(names, exps):
        if e == 1:
            body += name
        elif e > 1:
            body += f"{name}^{e}"
    mag = abs(coeff)
    if not body:
        return _coeff_str(mag)
    if mag == 1:
        return body
    return f"{_coeff_str(mag)}{body}"


def _render(terms, names) -> str:
    # terms: list of (exps, coeff) already in canonical order
    if not terms:
        return "0"
    out = []
    for k, (exps, coeff) in enumerate(terms):
        text = _term_text(exps, coeff, names)
        if k == 0:
            out.append(f"-{text}" if coeff < 0 else text)
        else:
            out.append(f"- {text}" if coeff < 0 else f"+ {text}")
    return " ".join(out)


@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial over the rationals."""

    var: str
    coeffs: tuple[Fraction, ...]  # coeffs[i] is the coefficient of var**i

    def __init__(self, var: str, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, var: str, c) -> "UniPoly":
        return cls(var, (Fraction(c),))

    @classmethod
    def monomial(cls, var: str, degree: int, c=1) -> "UniPoly":
        return cls(var, (0,) * degree + (Fraction(c),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def _check(self, other: "UniPoly"):
        if self.var != other.var:
            raise PolynomialError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(self.var, other)
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.var, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self):
        return UniPoly(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(self.var, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly(self.var, [c * other for c in self.coeffs])
        self._check(other)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(self.var, out)

    __rmul__ = __mul__
    __radd__ = __add__

    def shift(self, k: int) -> "UniPoly":
        """Multiply by var**k."""
        if self.is_zero():
            return self
        return UniPoly(self.var, (Fraction(0),) * k + self.coeffs)

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_integer(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def terms(self):
        return [((i,), c) for i, c in sorted(enumerate(self.coeffs), reverse=True) if c]

    def __str__(self) -> str:
        return _render(self.terms(), (self.var,))


@dataclass(frozen=True)
class BiPoly:
    """Sparse bivariate polynomial over the rationals.

    Terms are kept in graded-lexicographic descending order, so equality,
    hashing and printing are canonical.
    """

    vars: tuple[str, str]
    terms: tuple[tuple[Exp2, Fraction], ...]

    def __init__(self, vars, terms=()):
        vars = tuple(vars)
        if len(vars) != 2 or vars[0] == vars[1]:
            raise PolynomialError(f"need two distinct variable labels, got {vars!r}")
        acc: dict[Exp2, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (i, j), c in items:
            c = Fraction(c)
            if c:
                key = (int(i), int(j))
                acc[key] = acc.get(key, Fraction(0)) + c
        ordered = tuple(
            (e, acc[e])
            for e in sorted(acc, key=lambda e: (e[0] + e[1], e), reverse=True)
            if acc[e]
        )
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", ordered)

    @classmethod
    def constant(cls, vars, c) -> "BiPoly":
        return cls(vars, {(0, 0): Fraction(c)})

    @classmethod
    def variable(cls, vars, which: int) -> "BiPoly":
        e = (1, 0) if which == 0 else (0, 1)
        return cls(vars, {e: 1})

    def as_dict(self) -> dict[Exp2, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "BiPoly"):
        if self.vars != other.vars:
            raise PolynomialError(f"variable mismatch: {self.vars!r} vs {other.vars!r}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(self.vars, other)
        self._check(other)
        acc = self.as_dict()
        for e, c in other.terms:
            acc[e] = acc.get(e, Fraction(0)) + c
        return BiPoly(self.vars, acc)

    def __neg__(self):
        return BiPoly(self.vars, [(e, -c) for e, c in self.terms])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(self.vars, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiPoly(self.vars, [(e, c * other) for e, c in self.terms])
        self._check(other)
        acc: dict[Exp2, Fraction] = {}
        for (i1, j1), c1 in self.terms:
            for (i2, j2), c2 in other.terms:
                e = (i1 + i2, j1 + j2)
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return BiPoly(self.vars, acc)

    __rmul__ = __mul__
    __radd__ = __add__

    def __pow__(self, k: int) -> "BiPoly":
        if k < 0:
            raise PolynomialError("negative power")
        out = BiPoly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def eval_at(self, point) -> Fraction:
        a, b = (Fraction(v) for v in point)
        acc = Fraction(0)
        for (i, j), c in self.terms:
            acc += c * a**i * b**j
        return acc

    def substitute(self, which: int, value) -> UniPoly:
        """Plug a value into one variable; returns a polynomial in the other."""
        value = Fraction(value)
        out: dict[int, Fraction] = {}
        for (i, j), c in self.terms:
            fixed, free = (i, j) if which == 0 else (j, i)
            contrib = c * value**fixed
            if contrib:
                out[free] = out.get(free, Fraction(0)) + contrib
        if not out:
            return UniPoly(self.vars[1 - which], ())
        coeffs = [Fraction(0)] * (max(out) + 1)
        for d, c in out.items():
            coeffs[d] = c
        return UniPoly(self.vars[1 - which], coeffs)

    def degree_in(self, which: int) -> int:
        return max((e[which] for e, _ in self.terms), default=-1)

    def is_integer(self) -> bool:
        return all(c.denominator == 1 for _, c in self.terms)

    def __str__(self) -> str:
        return _render(list(self.terms), self.vars)


def to_json_dict(p: BiPoly | UniPoly) -> dict:
    """Machine-readable form: exact coefficients rendered as decimal strings."""
    if isinstance(p, BiPoly):
        names, terms = list(p.vars), list(p.terms)
    else:
        names, terms = [p.var], p.terms()
    return {
        "variables": names,
        "terms": [{"exp": list(e), "coeff": _coeff_str(c)} for e, c in terms],
    }


def _divide_by_second_var_minus_one(p: BiPoly) -> BiPoly:
    """Exact division by (y - 1) where y is the second variable."""
    by_j: dict[int, dict[int, Fraction]] = {}
    for (i, j), c in p.terms:
        by_j.setdefault(j, {})[i] = c
    if not by_j:
        return p
    d = max(by_j)
    quot: dict[int, dict[int, Fraction]] = {}
    carry: dict[int, Fraction] = {}
    for j in range(d, 0, -1):
        level = dict(by_j.get(j, {}))
        for i, c in carry.items():
            level[i] = level.get(i, Fraction(0)) + c
        quot[j - 1] = level
        carry = level
    rem = dict(by_j.get(0, {}))
    for i, c in carry.items():
        rem[i] = rem.get(i, Fraction(0)) + c
    if any(c != 0 for c in rem.values()):
        raise IntegrityAlarm("nonzero remainder dividing by (y - 1); "
                             "input is not a valid (coboundary, rank) pair")
    terms = {}
    for j, level in quot.items():
        for i, c in level.items():
            if c:
                terms[(i, j)] = c
    return BiPoly(p.vars, terms)


def tutte_from_coboundary(cb: BiPoly, rank: int) -> BiPoly:
    """T(x,y) = (y-1)^(-rank) * cb((x-1)(y-1), y), with an exactness check."""
    if cb.vars != ("q", "t"):
        raise PolynomialError(f"coboundary polynomial must be in (q, t), got {cb.vars!r}")
    xy = ("x", "y")
    qsub = BiPoly(xy, {(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1})  # (x-1)(y-1)
    acc = BiPoly(xy)
    qpow = {0: BiPoly.constant(xy, 1)}
    for (i, j), c in cb.terms:
        if i not in qpow:
            qpow[i] = qsub**i
        acc = acc + qpow[i] * BiPoly(xy, {(0, j): c})
    for _ in range(rank):
        acc = _divide_by_second_var_minus_one(acc)
    return acc


def characteristic_from_coboundary(cb: BiPoly, n: int, rank: int) -> UniPoly:
    """chi(q) = q^(n - rank) * cb(q, 0)."""
    if cb.vars != ("q", "t"):
        raise PolynomialError(f"coboundary polynomial must be in (q, t), got {cb.vars!r}")
    if n < rank:
        raise InputError(f"rank {rank} exceeds ambient dimension {n}")
    return cb.substitute(1, 0).shift(n - rank)


def _checked_count(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise IntegrityAlarm(f"{what} evaluated to {value}; not a valid characteristic polynomial")
    return int(value)


def regions(chi: UniPoly, n: int) -> int:
    """Number of regions the arrangement cuts space into: (-1)^n chi(-1)."""
    return _checked_count((-1) ** n * chi(-1), "region count")


def bounded_regions(chi: UniPoly, rank: int) -> int:
    """Number of relatively bounded regions: (-1)^rank chi(1)."""
    return _checked_count((-1) ** rank * chi(1), "bounded region count")
