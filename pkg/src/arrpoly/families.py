"""Built-in families of symmetric arrangements, addressable by name.

Each family is defined by representative equations that do not depend on
the ambient dimension, so the same equations generate the whole sequence
A_2, A_3, ... by orbit expansion:

  weyl-a         x1 - x2 = 0                   (braid arrangement)
  catalan        x1 - x2 = 0,  x1 - x2 = 1
  shi-threshold  x1 + x2 = 0,  x1 + x2 = 1
  i-arrangement  x1 = 0,  x1 = 1,  x1 + x2 = 1
"""

from __future__ import annotations

from functools import lru_cache

from .arrangement import Arrangement
from .errors import InputError
from .symmetric_engine import RepresentativeEquation, expand, extract_representatives

MIN_DIMENSION = 2  # all families have an arity-2 representative

_DEFINITIONS: dict[str, tuple[tuple[tuple[int, ...], int], ...]] = {
    "weyl-a": (((1, -1), 0),),
    "catalan": (((1, -1), 0), ((1, -1), 1)),
    "shi-threshold": (((1, 1), 0), ((1, 1), 1)),
    "i-arrangement": (((1,), 0), ((1,), 1), ((1, 1), 1)),
}

FAMILY_NAMES = tuple(sorted(_DEFINITIONS))


def _defining_equations(name: str) -> tuple[RepresentativeEquation, ...]:
    if name not in _DEFINITIONS:
        raise InputError(f"unknown family {name!r}; known: {', '.join(FAMILY_NAMES)}")
    return tuple(RepresentativeEquation(c, b) for c, b in _DEFINITIONS[name])


@lru_cache(maxsize=None)
def build_family(name: str, n: int) -> Arrangement:
    """The family member in R^n as an explicit arrangement."""
    eqs = _defining_equations(name)
    if n < MIN_DIMENSION:
        raise InputError(f"family {name!r} needs dimension >= {MIN_DIMENSION}, got {n}")
    return expand(eqs, n)


@lru_cache(maxsize=None)
def family_representatives(name: str) -> tuple[RepresentativeEquation, ...]:
    """Canonical representative equations, identical to what extraction
    returns on any expanded member (hence dimension-independent)."""
    return extract_representatives(build_family(name, MIN_DIMENSION))
