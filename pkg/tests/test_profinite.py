import math

import pytest
from hypothesis import given, strategies as st

from protori.errors import InvalidScalar
from protori.profinite import (
    FgProfiniteGroup,
    KernelRow,
    NaInvariants,
    isogenous,
    kernel_descriptor,
    na_invariants,
    quotient_mod_k,
    scalar_mul,
    standardize,
    verify_exactness,
)
from protori.supernatural import INF, SupernaturalNumber as SN
from protori.truncation import FiniteAbelianGroup, fab_iso, fab_quotient_by_enumeration, truncate
from strategies import PRIMES, groups, perturbed

G = FgProfiniteGroup
ZHAT = G.zhat()


def test_standardize_examples():
    assert standardize(G()) == G()
    # column at 2 is (1, 2) -> (2, 1); every other column (1, 0) is sorted already
    D = G([SN(1), SN(0, {2: 2})])
    assert standardize(D) == G([SN(1, {2: 2}), SN(0, {2: 1})])
    assert standardize(G([SN(0), SN(0)])) == G()


def test_standardize_is_normalized():
    S = standardize(G([SN(0, {3: 1}), SN(INF, {5: 0}), SN(2, {3: 4})]))
    assert S.is_normalized
    # column at 3 is (1, inf, 4) -> (inf, 4, 1); column at 5 is (0, 0, 2) -> (2, 0, 0)
    assert S.rows[0] == SN(INF, {5: 2})


def test_na_invariants_examples():
    assert na_invariants(ZHAT) == NaInvariants(1, 1)
    assert na_invariants(G([SN(0, {2: 2}), SN(1)])) == NaInvariants(2, 1)
    assert na_invariants(G.cyclic(6)) == NaInvariants(1, 0)


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("n", range(0, 5))
def test_quotient_of_p_adic_integers(p, n):
    expected = G.cyclic(p**n) if n else G()
    assert quotient_mod_k(G.p_adic(p), p**n) == standardize(expected)


def test_quotient_examples():
    D = G([SN(3, {2: INF})])
    assert quotient_mod_k(D, 1) == G()
    Q = quotient_mod_k(ZHAT, 12)
    assert Q == G([SN(0, {2: 2, 3: 1})])
    oracle = fab_quotient_by_enumeration(truncate(ZHAT, [2, 3], 3), 12)
    assert fab_iso(truncate(Q, [2, 3], 3), oracle)
    assert oracle == FiniteAbelianGroup(((2, 2), (3, 1)))
    with pytest.raises(InvalidScalar):
        quotient_mod_k(ZHAT, 0)


def test_scalar_mul_examples():
    D = G([SN(1, {7: INF})])
    assert scalar_mul(D, 1) == standardize(D)
    # 2 * Z(8) = {0, 2, 4, 6} is cyclic of order 4
    assert {2 * x % 8 for x in range(8)} == {0, 2, 4, 6}
    assert scalar_mul(G.cyclic(8), 2) == G.cyclic(4)
    assert scalar_mul(ZHAT, 6) == ZHAT
    with pytest.raises(InvalidScalar):
        scalar_mul(ZHAT, 0)


def test_kernel_descriptor_examples():
    K = kernel_descriptor(G.zhat(2))
    assert K.rows == (KernelRow(False), KernelRow(False))
    (row,) = kernel_descriptor(G.cyclic(5 ** 3)).rows
    assert all(row.is_free(p) for p in PRIMES + [101])
    (row,) = kernel_descriptor(G([SN(0, {2: INF})])).rows
    assert not row.is_free(2) and row.is_free(3) and row.is_free(97)


def test_verify_exactness_examples():
    assert verify_exactness(ZHAT)
    assert verify_exactness(G([SN(0, {2: 2}), SN(0, {3: 1})]))


def test_isogenous_examples():
    D = G([SN(1, {2: INF}), SN(0, {3: 2})])
    assert isogenous(D, scalar_mul(D, 12))
    assert isogenous(G([SN(0, {2: 1}), SN(INF)]), ZHAT)
    assert not isogenous(G([SN(1)]), G())
    assert not isogenous(ZHAT, G.zhat(2))


def test_order():
    assert G.cyclic(12).order() == 12
    assert ZHAT.order() == INF


@given(groups())
def test_standardize_idempotent(D):
    S = standardize(D)
    assert S.is_normalized
    assert standardize(S) == S
    assert isogenous(S, D)
    assert na_invariants(S) == na_invariants(D)


@given(groups(), st.randoms())
def test_row_permutation_invariance(D, rnd):
    rows = list(D.rows)
    rnd.shuffle(rows)
    assert standardize(G(rows)) == standardize(D)


@given(groups(), st.integers(1, 2000))
def test_quotient_order_divides_k_power(D, k):
    order = quotient_mod_k(D, k).order()
    assert (k ** D.width) % order == 0


@given(groups(), st.integers(1, 500), st.integers(1, 500))
def test_scalar_mul_multiplicative(D, a, b):
    assert scalar_mul(scalar_mul(D, a), b) == scalar_mul(D, a * b)


@given(groups())
def test_exactness_self_check(D):
    assert verify_exactness(D)


@given(st.data(), groups())
def test_isogeny_under_perturbation(data, D):
    E = G([data.draw(perturbed(r)) for r in D.rows])
    assert isogenous(D, E)
    assert na_invariants(D).dimension == na_invariants(E).dimension


@given(groups(), groups(), groups())
def test_isogeny_symmetric(D, E, F):
    assert isogenous(D, E) == isogenous(E, D)
    if isogenous(D, E) and isogenous(E, F):
        assert isogenous(D, F)


def test_json_round_trip():
    D = G([SN(INF, {3: 1}), SN(0, {2: 2})])
    assert G.from_json(D.to_json()) == D
