import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hopfquot.gamma import (
    GammaAction,
    GammaMN,
    GammaMNElement,
    companion_matrices,
    finite_quotient,
    gamma_generator,
    krylov_independent,
    verify_action,
)
from hopfquot.groups import cyclic, dihedral, is_isomorphic, symmetric
from hopfquot.lattice import SubgroupHNF

SHAPES = [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]


def elements(gam, bound=3):
    return st.builds(
        lambda t, n: gam.element(t, n),
        st.lists(st.integers(-bound, bound), min_size=gam.rank, max_size=gam.rank),
        st.integers(0, gam.N - 1),
    )


shape_and_elems = st.sampled_from(SHAPES).flatmap(
    lambda s: st.tuples(st.just(GammaMN(*s)), *[elements(GammaMN(*s))] * 3)
)


@given(shape_and_elems)
def test_group_axioms(data):
    gam, x, y, z = data
    assert gam.mul(gam.mul(x, y), z) == gam.mul(x, gam.mul(y, z))
    assert gam.mul(x, gam.inv(x)) == gam.identity
    assert gam.mul(gam.identity, y) == y


@given(shape_and_elems)
def test_action_is_an_automorphism_of_order_M(data):
    gam, x, y, _ = data
    for l in range(gam.M):
        assert gam.zm_act(l, gam.mul(x, y)) == gam.mul(gam.zm_act(l, x), gam.zm_act(l, y))
    assert gam.zm_act(gam.M, x) == x
    assert gam.zm_act(1, gam.zm_act(2, x)) == gam.zm_act(3, x)


@pytest.mark.parametrize("shape", SHAPES)
def test_presentation_relations(shape):
    gam = GammaMN(*shape)
    M, N = shape
    gens = [gam.generator(i) for i in range(M)]
    assert gens[0] == gamma_generator(M, N, 0) == gam.element([0] * gam.rank, 1)
    for g in gens:
        assert gam.power(g, N) == gam.identity
    rng = random.Random(0)
    words = [gam.product(rng.choice(gens) for _ in range(N)) for _ in range(12)]
    for u in words:
        assert u.npart == 0
        for v in words:
            assert gam.mul(u, v) == gam.mul(v, u)
    for i in range(M):
        for l in range(M):
            assert gam.zm_act(l, gens[i]) == gens[(i + l) % M]


@pytest.mark.parametrize("shape", SHAPES)
def test_a_symbols_follow_their_definition(shape):
    gam = GammaMN(*shape)
    g0 = gam.generator(0)
    for i in range(gam.M):
        for c in range(gam.N):
            expected = gam.product([gam.power(g0, c - 1), gam.generator(i), gam.power(g0, -c)])
            assert gam.a(i, c) == expected
            if i == 0:
                assert gam.a(i, c) == gam.identity


def test_small_group_relations_in_two_by_two():
    gam = GammaMN(2, 2)
    g0, g1 = gam.generator(0), gam.generator(1)
    assert gam.mul(g1, g0) == gam.a(1, 1)
    assert gam.mul(g0, g1) == gam.inv(gam.a(1, 1))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_matrices_are_the_two_companions(p):
    first, second = companion_matrices(p)
    assert [list(r) for r in GammaMN(2, p).t_matrix] == first
    assert [list(r) for r in GammaMN(p, 2).zm_matrix(1)] == second


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_krylov_iterates_independent(p):
    rng = random.Random(p)
    for mat in companion_matrices(p):
        for _ in range(20):
            v = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(p - 1)]
            if any(v):
                assert krylov_independent(mat, v)


def test_krylov_detects_dependence():
    assert not krylov_independent([[1, 0], [0, 1]], [1, 2])


def test_finite_quotient_tables():
    gam = GammaMN(2, 2)
    Q = finite_quotient(gam, SubgroupHNF.from_generators(1, [[3]]))
    assert Q.table.validate() == []
    assert is_isomorphic(Q.table, symmetric(3))
    Q4 = finite_quotient(gam, SubgroupHNF.from_generators(1, [[4]]))
    assert is_isomorphic(Q4.table, dihedral(4))
    gam32 = GammaMN(3, 2)
    Q = finite_quotient(gam32, SubgroupHNF.from_generators(2, [[3, 0], [-2, 1]]))
    assert Q.table.order == 6 and Q.table.validate() == []


def test_quotient_projection_is_a_homomorphism():
    gam = GammaMN(3, 2)
    Q = finite_quotient(gam, SubgroupHNF.from_generators(2, [[4, 0], [0, 4]]))
    rng = random.Random(3)
    for _ in range(50):
        x, y = gam.random_element(rng), gam.random_element(rng)
        assert Q.project(gam.mul(x, y)) == Q.table.mul(Q.project(x), Q.project(y))
        assert Q.project(Q.section(Q.project(x))) == Q.project(x)
        assert Q.project(gam.zm_act(1, x)) == int(Q.zm_perms[1][Q.project(x)])


def test_finite_quotient_rejects_bad_subgroups():
    gam = GammaMN(3, 2)
    with pytest.raises(ValueError, match="infinite"):
        finite_quotient(gam, SubgroupHNF.from_generators(2, [[1, 0]]))
    with pytest.raises(ValueError, match="stable under h"):
        finite_quotient(gam, SubgroupHNF.from_generators(2, [[1, 0], [0, 5]]))


def test_canonical_action_verifies_and_bogus_action_fails():
    gam = GammaMN(2, 2)
    assert verify_action(gam.canonical_action()).passed
    g0, g1 = gam.generator(0), gam.generator(1)
    bogus = GammaAction(gam, cyclic(2), ((g0, gam.mul(g0, g1)),))
    assert not verify_action(bogus).passed
