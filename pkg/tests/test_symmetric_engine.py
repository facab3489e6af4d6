import random
from math import comb

import pytest

from arrpoly import (
    Arrangement,
    CertificationError,
    Hyperplane,
    InputError,
    PatternDivergenceError,
    ReducedArrangement,
    RepresentativeEquation,
    SolutionPartition,
    Stabilizer,
    SymmetryError,
    UniPoly,
    build_family,
    coboundary_at_prime,
    coboundary_closed_form,
    certify_prime,
    expand,
    extract_representatives,
    h_count,
    h_symbolic,
    partition_solutions,
    solutions_mod_q,
)
from arrpoly.symmetric_engine import composition_exponent, multinomial, weak_compositions


def eq(coeffs, rhs):
    return RepresentativeEquation(coeffs, rhs)


def test_representative_equation_validation():
    with pytest.raises(InputError):
        eq((1, 0, 1), 0)
    with pytest.raises(InputError):
        eq((), 0)
    e = eq((2, -2), 4)
    assert e.coeffs == (1, -1) and e.rhs == 2


def test_stabilizer_of_pair_sum():
    assert len(Stabilizer.of_equation(eq((1, 1), 1))) == 2


def test_stabilizer_of_difference_with_offset():
    assert Stabilizer.of_equation(eq((1, -1), 1)).perms == ((0, 1),)


def test_stabilizer_of_difference_homogeneous():
    # swapping x1-x2=0 gives x2-x1=0, the same hyperplane up to sign
    assert len(Stabilizer.of_equation(eq((1, -1), 0))) == 2


def test_stabilizer_closure_enforced():
    with pytest.raises(InputError):
        Stabilizer(((1, 0, 2),))  # no identity
    with pytest.raises(InputError):
        Stabilizer(((0, 1, 2), (1, 2, 0)))  # cycle without its square


def test_extract_representatives_i2(i2):
    assert extract_representatives(i2) == (eq((1,), 0), eq((1,), 1), eq((1, 1), 1))


def test_extract_representatives_st3():
    a = build_family("shi-threshold", 3)
    assert extract_representatives(a) == (eq((1, 1), 0), eq((1, 1), 1))


def test_extract_representatives_rejects_partial_orbit():
    a = Arrangement(3, [Hyperplane((1, -1, 0), 0), Hyperplane((1, 0, -1), 0)])
    with pytest.raises(SymmetryError):
        extract_representatives(a)


def sol_values(sols):
    return [s.values for s in sols]


def test_solutions_difference_homogeneous_mod_5():
    sols = solutions_mod_q(eq((1, -1), 0), 5)
    assert sol_values(sols) == [(0, 0), (1, 1), (2, 2), (3, 3), (4, 4)]


def test_solutions_difference_offset_mod_5():
    # q ordered solutions (i+1, i), trivial stabilizer, all kept
    sols = solutions_mod_q(eq((1, -1), 1), 5)
    assert sol_values(sols) == [(0, 4), (1, 0), (2, 1), (3, 2), (4, 3)]
    assert all(s.orbit_size == 1 for s in sols)


def test_solutions_pair_sum_mod_5():
    sols = solutions_mod_q(eq((1, 1), 1), 5)
    assert sol_values(sols) == [(0, 1), (2, 4), (3, 3)]
    assert [s.orbit_size for s in sols] == [2, 2, 1]


def test_solutions_unary_mod_7():
    assert sol_values(solutions_mod_q(eq((1,), 1), 7)) == [(1,)]


@pytest.mark.parametrize("coeffs,rhs,q", [((1, 1), 1, 5), ((1, -1), 1, 7), ((1, 1, 1), 2, 5)])
def test_orbit_sizes_sum_to_ordered_solution_count(coeffs, rhs, q):
    sols = solutions_mod_q(eq(coeffs, rhs), q)
    assert sum(s.orbit_size for s in sols) == q ** (len(coeffs) - 1)


def test_solutions_reject_vanishing_coefficient():
    with pytest.raises(CertificationError):
        solutions_mod_q(eq((1, 5), 1), 5)


def test_h_symbolic_braid_formula():
    # for the braid family h(y) is sum over residues of C(#coords equal, 2)
    reps = extract_representatives(build_family("weyl-a", 4))
    rng = random.Random(3)
    for _ in range(40):
        q = rng.choice([5, 7])
        y = tuple(rng.randrange(q) for _ in range(4))
        counts = {k: y.count(k) for k in set(y)}
        assert h_symbolic(reps, q, y) == sum(comb(c, 2) for c in counts.values())


def test_h_symbolic_catalan_origin(c2):
    reps = extract_representatives(c2)
    assert h_symbolic(reps, 5, (0, 0)) == 1


def test_h_symbolic_st2_point(st2):
    reps = extract_representatives(st2)
    assert h_symbolic(reps, 5, (2, 3)) == 1


@pytest.mark.parametrize("name,n,q", [("weyl-a", 4, 7), ("catalan", 3, 5),
                                      ("shi-threshold", 3, 7), ("i-arrangement", 3, 7)])
def test_h_symbolic_agrees_with_h_count(name, n, q):
    a = build_family(name, n)
    reps = extract_representatives(a)
    red = ReducedArrangement(a, q)
    rng = random.Random(n * q)
    for _ in range(200):
        y = tuple(rng.randrange(q) for _ in range(n))
        assert h_symbolic(reps, q, y) == h_count(red, y)


def test_partition_braid_is_singletons():
    sols = solutions_mod_q(eq((1, -1), 0), 5)
    p = partition_solutions(sols)
    assert len(p.blocks) == 5
    assert all(len(b) == 1 for b in p.blocks)


def test_partition_catalan_single_block(c2):
    reps = extract_representatives(c2)
    sols = [s for e in reps for s in solutions_mod_q(e, 5)]
    p = partition_solutions(sols)
    assert len(p.blocks) == 1
    assert len(p.blocks[0]) == 10
    assert p.supports[0] == frozenset(range(5))


def test_partition_i_family_at_7(i2):
    reps = extract_representatives(i2)
    sols = [s for e in reps for s in solutions_mod_q(e, 7)]
    p = partition_solutions(sols)
    got = [(sorted(sup), sorted(s.values for s in block))
           for sup, block in zip(p.supports, p.blocks)]
    assert got == [
        ([0, 1], [(0,), (0, 1), (1,)]),
        ([2, 6], [(2, 6)]),
        ([3, 5], [(3, 5)]),
        ([4], [(4, 4)]),
    ]


def test_partition_validation_rejects_overlap():
    a, b = solutions_mod_q(eq((1, -1), 0), 5)[:2]
    with pytest.raises(InputError):
        SolutionPartition(((a,), (a, b)))


def test_partition_exponent_is_flat_sum():
    # splitting the solution list into blocks changes nothing: the exponent
    # is a plain sum over all solutions
    reps = extract_representatives(build_family("i-arrangement", 3))
    sols = [s for e in reps for s in solutions_mod_q(e, 7)]
    p = partition_solutions(sols)
    for comp in [(3, 0, 0, 0, 0, 0, 0), (1, 1, 1, 0, 0, 0, 0), (0, 2, 0, 0, 0, 1, 0)]:
        flat = composition_exponent(sols, comp)
        blockwise = sum(composition_exponent(b, comp) for b in p.blocks)
        singletons = sum(composition_exponent([s], comp) for s in sols)
        assert flat == blockwise == singletons


def test_closed_form_single_hyperplane_at_3(single_r2):
    assert coboundary_closed_form(single_r2, 3) == UniPoly("t", (2, 1))


def test_closed_form_catalan_2_at_5(c2):
    assert coboundary_closed_form(c2, 5) == UniPoly("t", (2, 3))


def test_closed_form_empty(empty_r2):
    assert coboundary_closed_form(empty_r2, 5) == UniPoly("t", (1,))


@pytest.mark.parametrize("name", ["weyl-a", "catalan", "shi-threshold", "i-arrangement"])
@pytest.mark.parametrize("n,q", [(2, 5), (3, 5), (3, 7)])
def test_closed_form_matches_point_count(name, n, q):
    a = build_family(name, n)
    assert coboundary_closed_form(a, q) == coboundary_at_prime(a, q)


def test_closed_form_at_uncertified_prime_is_modular_truth():
    # q=5 fails good-reduction certification for the dimension-5 member, but
    # the closed form still equals the honest mod-5 point count
    a = build_family("catalan", 5)
    assert not certify_prime(a, 5)
    assert coboundary_closed_form(a, 5) == coboundary_at_prime(a, 5, unsafe=True)


def test_closed_form_refuses_pattern_divergence():
    a = expand([eq((1, 2), 3)], 2)
    with pytest.raises(PatternDivergenceError):
        coboundary_closed_form(a, 7)


def test_closed_form_rejects_collisions():
    a = build_family("catalan", 2)
    with pytest.raises(CertificationError):
        coboundary_closed_form(a, 2)


def test_closed_form_requires_symmetry():
    a = Arrangement(3, [Hyperplane((1, -1, 0), 0), Hyperplane((1, 0, -1), 0)])
    with pytest.raises(SymmetryError):
        coboundary_closed_form(a, 5)


def test_weak_compositions_count_and_sum():
    comps = list(weak_compositions(4, 3))
    assert len(comps) == comb(4 + 2, 2)
    assert all(sum(c) == 4 for c in comps)
    assert len(set(comps)) == len(comps)


def test_multinomial():
    assert multinomial((2, 1, 1)) == 12
    assert multinomial((0, 0, 3)) == 1
    assert multinomial(()) == 1


def test_expand_matches_family():
    assert expand([eq((1, 1), 0), eq((1, 1), 1)], 3) == build_family("shi-threshold", 3)
