import pytest
from hypothesis import given, strategies as st

from protori.errors import InvalidDescriptor, InvalidScalar, MismatchedBase, NotContained
from protori.lattice import (
    LatticeElement,
    find_conductor,
    index,
    join,
    leq,
    meet,
    preimage_mu,
    scale,
)
from protori.profinite import FgProfiniteGroup, isogenous, quotient_mod_k
from protori.supernatural import INF, SupernaturalNumber as SN
from strategies import bases, lattice_elements

ZHAT = LatticeElement(FgProfiniteGroup.zhat())
# row 0: free at 2, Z(p) elsewhere; row 1: Z(p) at every p except 3, where it is 0
MIXED = LatticeElement(FgProfiniteGroup([SN(1, {2: INF}), SN(1, {3: 0})]))


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def test_base_validation():
    with pytest.raises(InvalidDescriptor):
        LatticeElement(FgProfiniteGroup.cyclic(6))
    with pytest.raises(InvalidDescriptor):
        LatticeElement(FgProfiniteGroup([SN(0, {3: INF}), SN(INF)]))  # not standardized
    with pytest.raises(InvalidDescriptor):
        LatticeElement(FgProfiniteGroup.zhat(), torsion_levels={(0, 2): 1})
    with pytest.raises(InvalidDescriptor):
        LatticeElement(FgProfiniteGroup.zhat(), free_offsets={(1, 2): 1})


def test_meet_examples():
    assert meet(MIXED, MIXED) == MIXED
    six = meet(scale(ZHAT, 2), scale(ZHAT, 3))
    assert six == scale(ZHAT, 6)
    assert six.free_offsets == {(0, 2): 1, (0, 3): 1}
    for k in (2, 5, 12):
        assert meet(MIXED, scale(MIXED, k)) == scale(MIXED, k)


def test_join_examples():
    assert join(MIXED, MIXED) == MIXED
    assert join(scale(MIXED, 12), MIXED) == MIXED
    y = preimage_mu(MIXED, 6)
    assert join(MIXED, meet(MIXED, y)) == MIXED


def test_leq_examples():
    assert leq(MIXED, MIXED)
    assert leq(scale(MIXED, 10), MIXED)
    assert not leq(preimage_mu(MIXED, 2), MIXED)
    assert leq(MIXED, preimage_mu(MIXED, 2))


def test_index_examples():
    assert index(MIXED, MIXED) == 1
    assert index(scale(ZHAT, 12), ZHAT) == 12
    assert quotient_mod_k(FgProfiniteGroup.zhat(), 12).order() == 12
    # row 0: 2-adic offset +1, Z(3) -> 0; row 1: Z(2) -> 0, its 3-level is already 0
    assert index(scale(MIXED, 6), MIXED) == 2 * 3 * 2
    with pytest.raises(NotContained):
        index(MIXED, scale(MIXED, 2))


def test_scale_examples():
    assert scale(MIXED, 1) == MIXED
    assert scale(ZHAT, 4).free_offsets == {(0, 2): 2}
    assert scale(scale(MIXED, 2), 3) == scale(MIXED, 6)
    # torsion levels clamp at zero
    assert scale(MIXED, 25).level(0, 5) == 0
    with pytest.raises(InvalidScalar):
        scale(MIXED, 0)


def test_preimage_examples():
    assert preimage_mu(MIXED, 1) == MIXED
    y = preimage_mu(MIXED, 12)
    assert y.offset(0, 2) == -2 and y.level(1, 2) == 1 + 2 and y.level(0, 3) == 1 + 1
    assert scale(y, 12).free_offsets == MIXED.free_offsets
    with pytest.raises(InvalidScalar):
        preimage_mu(MIXED, 0)


def test_conductor_examples():
    assert find_conductor(MIXED, MIXED) == 1
    assert find_conductor(ZHAT, scale(ZHAT, 6)) == 6
    assert find_conductor(preimage_mu(MIXED, 5), MIXED) == 5


def test_mismatched_base():
    with pytest.raises(MismatchedBase):
        meet(ZHAT, MIXED)


def test_json_round_trip():
    x = preimage_mu(scale(MIXED, 4), 3)
    assert LatticeElement.from_json(x.to_json()) == x


lattice_triples = bases().flatmap(
    lambda b: st.tuples(lattice_elements(b), lattice_elements(b), lattice_elements(b))
)


@given(lattice_triples)
def test_lattice_axioms(xyz):
    x, y, z = xyz
    assert meet(x, y) == meet(y, x) and join(x, y) == join(y, x)
    assert meet(meet(x, y), z) == meet(x, meet(y, z))
    assert join(join(x, y), z) == join(x, join(y, z))
    assert meet(x, x) == x and join(x, x) == x
    assert join(x, meet(x, y)) == x and meet(x, join(x, y)) == x
    assert leq(meet(x, y), x) and leq(x, join(x, y))


@given(lattice_triples)
def test_realizations_mutually_isogenous(xyz):
    x, y, _ = xyz
    assert isogenous(x.realize(), y.realize())
    assert isogenous(meet(x, y).realize(), join(x, y).realize())


@given(lattice_triples, st.integers(1, 60), st.integers(1, 60))
def test_index_multiplicative_along_chains(xyz, k1, k2):
    z = xyz[0]
    y = meet(scale(z, k1), xyz[1])
    x = meet(scale(y, k2), xyz[2])
    assert index(x, z) == index(x, y) * index(y, z)
    assert index(meet(xyz[0], xyz[1]), xyz[1]) >= 1


@given(bases().flatmap(lattice_elements), st.integers(1, 200))
def test_index_matches_quotient_order(x, k):
    # [x : kx] = |x / kx|, computed by the quotient formula on x as an abstract group
    assert index(scale(x, k), x) == quotient_mod_k(x.realize(), k).order()


@given(lattice_triples)
def test_conductor_minimal(xyz):
    x, y, _ = xyz
    k = find_conductor(x, y)
    assert leq(scale(x, k), y)
    assert all(not leq(scale(x, d), y) for d in divisors(k) if d != k)


@given(bases().flatmap(lattice_elements), st.integers(1, 100))
def test_preimage_contains(x, n):
    assert leq(x, preimage_mu(x, n))
    assert leq(x, scale(preimage_mu(x, n), n))
    assert scale(preimage_mu(x, n), n).free_offsets == x.free_offsets
