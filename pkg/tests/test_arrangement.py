import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrpoly import (
    Arrangement,
    Hyperplane,
    InputError,
    Subarrangement,
    act,
    canonicalize,
    is_central,
    is_symmetric,
    orbit,
    rank_of,
)
from arrpoly import linalg
from arrpoly.arrangement import act_arrangement
from arrpoly.families import build_family

from conftest import arr


def test_canonicalize_sign():
    h = canonicalize((-1, 1), 0)
    assert h.coeffs == (1, -1) and h.rhs == 0


def test_canonicalize_scaling():
    h = canonicalize((2, 2), 2)
    assert h.coeffs == (1, 1) and h.rhs == 1


def test_canonicalize_rejects_zero_vector():
    with pytest.raises(InputError):
        canonicalize((0, 0), 1)


def test_scaled_equations_compare_equal():
    assert Hyperplane((3, -3), 6) == Hyperplane((Fraction(1, 2), Fraction(-1, 2)), 1)


@given(
    st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=1, max_size=4),
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
    st.fractions(min_value=-3, max_value=3, max_denominator=5).filter(lambda s: s != 0),
)
def test_canonical_form_invariant_under_scaling(coeffs, rhs, scale):
    if all(c == 0 for c in coeffs):
        coeffs = coeffs[:-1] + [Fraction(1)]
    h = Hyperplane(coeffs, rhs)
    assert Hyperplane([c * scale for c in coeffs], rhs * scale) == h


def test_act_transposition():
    h = Hyperplane((1, -1), 1)
    assert act((1, 0), h) == Hyperplane((1, -1), -1)


def test_act_identity():
    h = Hyperplane((1, Fraction(2, 3), 0), 5)
    assert act((0, 1, 2), h) == h


def test_act_three_cycle():
    # sigma maps position 1 -> 2, 2 -> 3, 3 -> 1
    h = Hyperplane((1, 1, 0), 1)
    assert act((1, 2, 0), h) == Hyperplane((0, 1, 1), 1)


def test_act_dimension_mismatch():
    with pytest.raises(InputError):
        act((0, 1), Hyperplane((1, 0, 0), 0))
    with pytest.raises(InputError):
        act((0, 0), Hyperplane((1, 1), 0))


def test_orbit_difference_hyperplane():
    got = orbit(Hyperplane((1, -1, 0), 0))
    want = {
        Hyperplane((1, -1, 0), 0),
        Hyperplane((1, 0, -1), 0),
        Hyperplane((0, 1, -1), 0),
    }
    assert got == want


def test_orbit_affine_difference():
    got = orbit(Hyperplane((1, -1), 1))
    assert got == {Hyperplane((1, -1), 1), Hyperplane((1, -1), -1)}


def test_orbit_coordinate_hyperplane():
    got = orbit(Hyperplane((1, 0, 0), 0))
    assert got == {Hyperplane((1, 0, 0), 0), Hyperplane((0, 1, 0), 0), Hyperplane((0, 0, 1), 0)}


def test_orbit_closed_under_action():
    h0 = Hyperplane((1, 1, 0, 0), 1)
    orb = orbit(h0)
    rng = random.Random(7)
    for _ in range(50):
        sigma = tuple(rng.sample(range(4), 4))
        for h in orb:
            assert act(sigma, h) in orb


@pytest.mark.parametrize("name,n", [("weyl-a", 3), ("catalan", 3), ("shi-threshold", 3),
                                    ("i-arrangement", 3), ("catalan", 4)])
def test_family_fixed_by_random_permutations(name, n):
    a = build_family(name, n)
    assert is_symmetric(a)
    rng = random.Random(42)
    for _ in range(50):
        sigma = tuple(rng.sample(range(n), n))
        assert set(act_arrangement(sigma, a).hyperplanes) == set(a.hyperplanes)


def test_is_central_empty(empty_r2):
    assert is_central(empty_r2.full())


def test_is_central_parallel_pair(parallel_pair):
    assert not is_central(parallel_pair.full())
    assert is_central(parallel_pair.subarrangement([0]))


def test_is_central_triangle(triangle_r3):
    assert is_central(triangle_r3.full())


def test_rank_single(single_r2):
    assert rank_of(single_r2.full()) == 1
    assert single_r2.rank == 1


def test_rank_parallel_pair(parallel_pair):
    assert rank_of(parallel_pair.full()) == 1


def test_rank_catalan_2(c2):
    assert c2.rank == 1


def test_rank_i_2(i2):
    assert i2.rank == 2


def brute_force_rank(rows):
    best = 0
    for k in range(1, len(rows) + 1):
        for sub in combinations(rows, k):
            rc, ra = linalg.ranks(sub)
            if rc == ra:
                best = max(best, rc)
    return best


@pytest.mark.parametrize("name,n", [("catalan", 2), ("i-arrangement", 2),
                                    ("shi-threshold", 3), ("weyl-a", 3)])
def test_rank_matches_brute_force_exhaustively(name, n):
    a = build_family(name, n)
    rows = a.int_rows()
    assert len(rows) <= 10
    for k in range(len(rows) + 1):
        for idx in combinations(range(len(rows)), k):
            sub = a.subarrangement(idx)
            assert rank_of(sub) == brute_force_rank([rows[i] for i in idx])


@st.composite
def small_arrangements(draw):
    n = draw(st.integers(min_value=1, max_value=3))
    m = draw(st.integers(min_value=0, max_value=5))
    hyperplanes = []
    for _ in range(m):
        coeffs = draw(
            st.lists(st.integers(min_value=-2, max_value=2), min_size=n, max_size=n)
            .filter(lambda cs: any(cs)))
        rhs = draw(st.integers(min_value=-2, max_value=2))
        hyperplanes.append(Hyperplane(coeffs, rhs))
    return Arrangement(n, hyperplanes)


@given(small_arrangements())
@settings(max_examples=150, deadline=None)
def test_rank_formula_matches_brute_force(a):
    assert a.rank == brute_force_rank(a.int_rows())


@given(small_arrangements(), st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_rank_monotone(a, rng):
    m = len(a.hyperplanes)
    idx = sorted(rng.sample(range(m), rng.randint(0, m)))
    sub = a.subarrangement(idx)
    r = rank_of(sub)
    assert r <= min(len(idx), a.dim)
    assert r <= a.rank
    if idx:
        smaller = a.subarrangement(idx[:-1])
        assert rank_of(smaller) <= r


def test_arrangement_dedups_scaled_duplicates():
    a = arr(2, [(1, -1, 0), (2, -2, 0), (-1, 1, 0)])
    assert len(a) == 1


def test_subarrangement_validation(c2):
    with pytest.raises(InputError):
        Subarrangement(c2, (1, 1))
    with pytest.raises(InputError):
        Subarrangement(c2, (0, 5))
    assert len(Subarrangement(c2, (0, 2)).hyperplanes()) == 2


def test_empty_arrangement_rank_zero(empty_r2):
    assert empty_r2.rank == 0
    assert is_central(empty_r2.full())
