import pytest

from arrpoly import (
    Arrangement,
    CertificationError,
    FqPoint,
    Hyperplane,
    InputError,
    IntegrityAlarm,
    ReducedArrangement,
    UniPoly,
    build_family,
    certify_prime,
    characteristic_at_prime,
    clear_denominators,
    coboundary_at_prime,
    coboundary_by_definition,
    h_count,
)
from arrpoly.fq_engine import histogram_direct, point_histogram, unipoly_from_counts

from conftest import SMALL_FIXTURES, arr


def test_clear_denominators_halves():
    a = arr(2, [(0.5, 1, 1)])
    assert clear_denominators(a) == ((1, 2, 2),)


def test_clear_denominators_integers_unchanged(single_r2):
    assert clear_denominators(single_r2) == ((1, -1, 0),)


def test_clear_denominators_1d():
    from fractions import Fraction
    a = Arrangement(1, [Hyperplane((Fraction(2, 3),), Fraction(4, 3))])
    assert clear_denominators(a) == ((1, 2),)


def test_certify_triangle_at_5(triangle_r3):
    assert certify_prime(triangle_r3, 5)


def test_certify_collision_mod_2():
    # x1+x2=0 and x1-x2=0 become the same hyperplane mod 2
    a = arr(2, [(1, 1, 0), (1, 1, 1), (1, -1, 0)])
    assert not certify_prime(a, 2)
    with pytest.raises(CertificationError):
        ReducedArrangement(a, 2)


def test_certify_catalan_2_at_3_mechanically(c2):
    # three parallel lines stay parallel and distinct mod 3, so q=3 certifies;
    # the per-prime value must then agree with the defining sum at q=3
    assert certify_prime(c2, 3)
    assert coboundary_at_prime(c2, 3) == coboundary_by_definition(c2).substitute(0, 3)


def test_certify_catalan_5_at_5_fails():
    # the five-term cycle x1-x2=1, ..., x5-x1=1 is noncentral over Q but
    # becomes central mod 5, so reduction at 5 is combinatorially wrong
    a = build_family("catalan", 5)
    assert not certify_prime(a, 5)
    with pytest.raises(CertificationError):
        coboundary_at_prime(a, 5)


def test_certify_requires_prime(c2):
    with pytest.raises(InputError):
        certify_prime(c2, 6)


def test_h_count_catalan(c2):
    red = ReducedArrangement(c2, 5)
    assert h_count(red, (0, 0)) == 1
    assert h_count(red, (0, 2)) == 0
    assert h_count(red, FqPoint((1, 0), 5)) == 1


def test_h_count_triangle_diagonal(triangle_r3):
    red = ReducedArrangement(triangle_r3, 5)
    assert h_count(red, (1, 1, 1)) == 3


def test_h_count_modulus_mismatch(c2):
    red = ReducedArrangement(c2, 5)
    with pytest.raises(InputError):
        h_count(red, FqPoint((1, 0), 7))


def test_fqpoint_validation():
    with pytest.raises(InputError):
        FqPoint((0, 5), 5)
    with pytest.raises(InputError):
        FqPoint((0, 1), 4)


def test_coboundary_single_at_3(single_r2):
    assert coboundary_at_prime(single_r2, 3) == UniPoly("t", (2, 1))


def test_coboundary_catalan_2_at_5(c2):
    assert coboundary_at_prime(c2, 5) == UniPoly("t", (2, 3))


def test_coboundary_st2_cross_engine(st2):
    assert coboundary_at_prime(st2, 5) == coboundary_by_definition(st2).substitute(0, 5)


@pytest.mark.parametrize("name,n", SMALL_FIXTURES)
@pytest.mark.parametrize("q", [5, 7, 11, 13])
def test_per_prime_matches_defining_sum(name, n, q):
    a = build_family(name, n)
    assert len(a) <= 12
    assert certify_prime(a, q)
    assert coboundary_at_prime(a, q) == coboundary_by_definition(a).substitute(0, q)


@pytest.mark.parametrize("name,n,q", [("catalan", 3, 5), ("i-arrangement", 3, 7),
                                      ("shi-threshold", 4, 5)])
def test_histogram_total_is_point_count(name, n, q):
    red = ReducedArrangement(build_family(name, n), q)
    hist = point_histogram(red)
    assert sum(hist.values()) == q**n


@pytest.mark.parametrize("name,n,q", [("catalan", 2, 5), ("weyl-a", 3, 5),
                                      ("i-arrangement", 3, 7), ("shi-threshold", 3, 5)])
def test_sweep_matches_direct_count(name, n, q):
    red = ReducedArrangement(build_family(name, n), q)
    assert point_histogram(red) == histogram_direct(red)


def test_parallel_jobs_identical(i2):
    red = ReducedArrangement(i2, 7)
    assert point_histogram(red, jobs=2) == point_histogram(red)


def test_characteristic_i2_at_7(i2):
    assert characteristic_at_prime(i2, 7) == 20


def test_characteristic_catalan_2_at_5(c2):
    assert characteristic_at_prime(c2, 5) == 10


def test_characteristic_empty(empty_r2):
    assert characteristic_at_prime(empty_r2, 5) == 25


def test_unsafe_bypasses_certification():
    a = build_family("catalan", 5)
    cb = coboundary_at_prime(a, 5, unsafe=True)
    # the mod-5 count is still a sane polynomial summing to q^n at t=1
    assert sum(c * 5 ** (a.dim - a.rank) for c in cb.coeffs) == 5**a.dim


def test_exact_division_alarm():
    with pytest.raises(IntegrityAlarm):
        unipoly_from_counts({0: 7, 1: 3}, 5, 1, "test sum")


def test_degenerate_row_mod_q():
    a = arr(2, [(5, 5, 1), (1, -1, 0)])
    with pytest.raises(CertificationError):
        ReducedArrangement(a, 5)
    assert not certify_prime(a, 5)
