import itertools

import pytest
from hypothesis import given, strategies as st

from hopfquot.datum import (
    FiniteDatum,
    LatticeDatum,
    derived_consequences,
    family_datum,
    finite_datum_from_lattice,
    gamma33_datum,
    is_char_valued,
    trivial_datum,
    validate_datum,
)
from hopfquot.gamma import GammaMN, finite_quotient
from hopfquot.lattice import SubgroupHNF
from hopfquot.scalars import UnitGroupSpec

Z3 = UnitGroupSpec.of(z=3)


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("twisted", [False, True])
def test_family_data_validate(m, twisted):
    d = family_datum(m, twisted)
    assert validate_datum(d).passed
    assert derived_consequences(d).passed
    assert is_char_valued(d)


@pytest.mark.parametrize("a,b", list(itertools.product(range(3), repeat=2)))
def test_gamma33_cube_roots(a, b):
    d = gamma33_datum(1, Z3.value([a]), Z3.value([b]))
    assert validate_datum(d).passed
    assert is_char_valued(d) == (a == b)


def test_gamma33_fifth_root_fails():
    Z5 = UnitGroupSpec.of(z=5)
    rep = validate_datum(gamma33_datum(1, Z5.value([1]), Z5.value([1])))
    assert not rep.passed
    assert any(c.name.startswith("phi:") for c in rep.failures)


def test_non_stable_subgroup_names_axiom_two():
    gam = GammaMN(3, 2)
    spec = UnitGroupSpec.of(s=2)
    N = SubgroupHNF.from_generators(2, [[1, 0], [0, 5]])
    d = LatticeDatum(gam, (0, 1, 2), N, ((spec.one(),) * 3,) * 2, spec)
    rep = validate_datum(d)
    assert not rep.passed
    assert rep.failures[0].name.startswith("normality:")


def test_non_normal_subgroup_detected():
    gam = GammaMN(2, 3)
    spec = UnitGroupSpec.of(s=2)
    N = SubgroupHNF.from_generators(2, [[1, 0]])
    d = LatticeDatum(gam, (0,), N, ((spec.one(),),), spec)
    rep = validate_datum(d)
    assert rep.failures and rep.failures[0].name == "normality: N normal (stable under t)"


def test_bad_subgroup_G_detected():
    gam = GammaMN(3, 2)
    d = LatticeDatum(gam, (0, 1), SubgroupHNF.zero(2), (), UnitGroupSpec.of(s=2))
    assert validate_datum(d).failures[0].name.startswith("subgroup:")


def test_trivial_datum_is_valid():
    d = trivial_datum(GammaMN(3, 3))
    assert validate_datum(d).passed


def test_json_round_trip_and_basis_transport():
    d = family_datum(3, True)
    back = LatticeDatum.from_json(d.to_json())
    assert back.N.basis == d.N.basis and back.phi == d.phi
    # Phi given on a different generating set is carried to the HNF basis
    data = {
        "M": 2, "N": 2, "unit_group": {"generators": [{"name": "s", "order": 2}]},
        "G": [0, 1], "N_basis": [[-3]], "Phi": {"gen0": {"e": {}, "h": {"s": 1}}},
    }
    e = LatticeDatum.from_json(data)
    assert e.N.basis == ((3,),)
    assert e.phi_vector((3,))[1] == UnitGroupSpec.of(s=2).value([1])


def test_finite_model_agrees_with_lattice_model():
    # U = 3 Z^4 lies in N = Z^4 and in the kernel of Phi since alpha^3 = beta^3 = 1
    d = gamma33_datum(1, Z3.value([1]), Z3.value([2]))
    Q = finite_quotient(d.gamma, SubgroupHNF.from_generators(4, [[3 if i == j else 0 for j in range(4)] for i in range(4)]))
    f = finite_datum_from_lattice(d, Q)
    assert isinstance(f, FiniteDatum)
    assert validate_datum(f).passed
    assert derived_consequences(f).passed


@given(st.integers(1, 8), st.booleans(), st.integers(0, 1000))
def test_derived_consequences_hold_for_families(m, twisted, seed):
    assert derived_consequences(family_datum(m, twisted), samples=10, seed=seed).passed
