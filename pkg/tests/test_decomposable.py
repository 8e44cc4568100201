import pytest
from hypothesis import given, strategies as st

from protori.decomposable import CdGroupDescriptor, acd_witness, cd_of_dual, dual_of_cd, quasi_isomorphic
from protori.errors import DimMismatch, InvalidDescriptor
from protori.protorus import ALL_INF, ProtorusDescriptor, isogenous_protori
from protori.supernatural import INF, SupernaturalNumber as SN
from strategies import perturbed, solenoid_chars

CD = CdGroupDescriptor
P = ProtorusDescriptor
TWO_ADIC = SN(0, {2: INF})

cd_groups = st.builds(CD, st.integers(0, 2), st.integers(0, 2), st.lists(solenoid_chars, max_size=3).map(tuple))


def test_invariants():
    with pytest.raises(InvalidDescriptor):
        CD(0, 0, (SN(0, {3: 2}),))
    with pytest.raises(InvalidDescriptor):
        CD(0, 0, (ALL_INF,))
    assert CD.from_characteristics([ALL_INF, SN(0), TWO_ADIC]) == CD(1, 1, (TWO_ADIC,))


def test_dual_examples():
    assert dual_of_cd(CD(0, 1)) == P(0, 1)
    assert dual_of_cd(CD(1, 0)) == P(1, 0)
    assert dual_of_cd(CD(0, 0, (TWO_ADIC,))) == P(0, 0, (TWO_ADIC,))
    assert cd_of_dual(P(0, 1)) == CD(0, 1)
    assert cd_of_dual(P(1, 0)) == CD(1, 0)


def test_quasi_isomorphic_examples():
    A = CD(1, 1, (TWO_ADIC,))
    assert quasi_isomorphic(A, A)
    assert not quasi_isomorphic(CD(0, 1), CD(1, 0))
    assert quasi_isomorphic(CD(0, 0, (TWO_ADIC,)), CD(0, 0, (SN(0, {2: INF, 5: 3}),)))


def test_acd_witness_examples():
    K = P(1, 0, (TWO_ADIC, SN(1, {3: INF})))
    assert acd_witness(K) == cd_of_dual(K)
    assert acd_witness(P(2, 0)) == CD(2, 0)
    with pytest.raises(DimMismatch):
        acd_witness(P(0, 1, (TWO_ADIC,)))


def test_json_round_trip():
    A = CD(1, 2, (TWO_ADIC,))
    assert CD.from_json(A.to_json()) == A


@given(cd_groups)
def test_duality_round_trip(A):
    assert cd_of_dual(dual_of_cd(A)) == A
    K = dual_of_cd(A)
    assert dual_of_cd(cd_of_dual(K)) == K


@given(cd_groups, cd_groups)
def test_quasi_iso_matches_isogeny(A, B):
    assert quasi_isomorphic(A, B) == isogenous_protori(dual_of_cd(A), dual_of_cd(B))


@given(st.data(), cd_groups)
def test_quasi_iso_equivalence(data, A):
    B = CD(A.divisible_rank, A.free_rank, tuple(data.draw(perturbed(t)) for t in A.types))
    C = CD(B.divisible_rank, B.free_rank, tuple(data.draw(perturbed(t)) for t in B.types))
    assert quasi_isomorphic(A, A)
    assert quasi_isomorphic(A, B) and quasi_isomorphic(B, A)
    assert quasi_isomorphic(B, C) and quasi_isomorphic(A, C)
    assert quasi_isomorphic(A, B) == isogenous_protori(dual_of_cd(A), dual_of_cd(B))


@given(cd_groups.filter(lambda A: A.free_rank == 0))
def test_witness_is_quasi_isomorphic(A):
    K = dual_of_cd(A)
    assert quasi_isomorphic(acd_witness(K), cd_of_dual(K))
