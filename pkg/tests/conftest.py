import pytest

from arrpoly import Arrangement, Hyperplane, build_family


def arr(dim, rows):
    """Arrangement from (c_1, ..., c_n, b) tuples."""
    return Arrangement(dim, [Hyperplane(r[:dim], r[dim]) for r in rows])


@pytest.fixture
def single_r2():
    """One hyperplane x1 = x2 in the plane."""
    return arr(2, [(1, -1, 0)])


@pytest.fixture
def parallel_pair():
    """x1 = 0 and x1 = 1 in the plane (noncentral)."""
    return arr(2, [(1, 0, 0), (1, 0, 1)])


@pytest.fixture
def triangle_r3():
    """The three difference hyperplanes x_i = x_j in R^3."""
    return build_family("weyl-a", 3)


@pytest.fixture
def c2():
    return build_family("catalan", 2)


@pytest.fixture
def st2():
    return build_family("shi-threshold", 2)


@pytest.fixture
def i2():
    return build_family("i-arrangement", 2)


@pytest.fixture
def empty_r2():
    return Arrangement(2)


# (family, n) pairs small enough for exhaustive subset enumeration
SMALL_FIXTURES = [
    ("weyl-a", 2),
    ("weyl-a", 3),
    ("weyl-a", 4),
    ("catalan", 2),
    ("catalan", 3),
    ("shi-threshold", 2),
    ("shi-threshold", 3),
    ("shi-threshold", 4),
    ("i-arrangement", 2),
    ("i-arrangement", 3),
]
