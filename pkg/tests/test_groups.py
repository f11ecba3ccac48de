import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hopfquot.groups import (
    FiniteGroupTable,
    cyclic,
    dihedral,
    direct_product,
    find_isomorphism,
    is_isomorphic,
    symmetric,
    trivial_group,
)


@pytest.mark.parametrize("G", [trivial_group(), cyclic(1), cyclic(6), dihedral(3), dihedral(4), symmetric(3), symmetric(4)])
def test_constructed_tables_are_groups(G):
    assert G.validate() == []


def test_orders_and_profiles():
    assert dihedral(4).order == 8 and not dihedral(4).is_abelian()
    assert dihedral(4).order_profile() == (1, 2, 2, 2, 2, 2, 4, 4)
    assert cyclic(12).exponent() == 12
    assert direct_product(cyclic(2), cyclic(2)).exponent() == 2
    assert symmetric(3).minimal_generating_set_size() == 2


def test_isomorphism_examples():
    assert is_isomorphic(symmetric(3), dihedral(3))
    assert is_isomorphic(direct_product(cyclic(2), cyclic(3)), cyclic(6))
    assert not is_isomorphic(direct_product(cyclic(2), cyclic(2)), cyclic(4))
    assert not is_isomorphic(dihedral(4), direct_product(cyclic(2), cyclic(4)))


def test_broken_table_detected():
    m = cyclic(4).mult.copy()
    m[1, 1], m[1, 2] = m[1, 2], m[1, 1]
    problems = FiniteGroupTable(m, 0).validate()
    assert problems and any("permutation" in p or "associativity" in p for p in problems)


def test_json_round_trip():
    G = dihedral(5)
    H = FiniteGroupTable.from_json(G.to_json())
    assert np.array_equal(H.mult, G.mult)


@given(st.integers(1, 6), st.integers(1, 6))
def test_isomorphism_is_a_homomorphism(a, b):
    G = direct_product(cyclic(a), cyclic(b))
    H = direct_product(cyclic(b), cyclic(a))
    f = find_isomorphism(G, H)
    assert f is not None
    for x, y in itertools.product(range(G.order), repeat=2):
        assert f[G.mul(x, y)] == H.mul(f[x], f[y])
    assert sorted(f.values()) == list(range(H.order))


@given(st.integers(1, 12), st.integers(1, 12))
def test_cyclic_products_classified_by_gcd(a, b):
    import math

    assert is_isomorphic(direct_product(cyclic(a), cyclic(b)), cyclic(a * b)) == (math.gcd(a, b) == 1)
