"""Seeded random values for self-tests and sweeps.

Everything draws from a caller-supplied :class:`random.Random`, so a seed
reproduces a run exactly.
"""

from __future__ import annotations

import random

from .lattice import LatticeElement, preimage_mu, scale
from .profinite import FgProfiniteGroup, row_is_infinite, standardize
from .protorus import ALL_INF, ProtorusDescriptor
from .decomposable import CdGroupDescriptor
from .supernatural import INF, SupernaturalNumber

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)
EXPONENTS = (0, 1, 2, 3, 4, INF)
DEFAULTS = (0, 0, 1, 2, INF)


def random_sn(rng: random.Random, primes=SMALL_PRIMES, exponents=EXPONENTS, defaults=DEFAULTS) -> SupernaturalNumber:
    default = rng.choice(defaults)
    k = rng.randint(0, len(primes))
    return SupernaturalNumber(default, {p: rng.choice(exponents) for p in rng.sample(primes, k)})


def random_group(rng: random.Random, max_width: int = 3, **kw) -> FgProfiniteGroup:
    return FgProfiniteGroup(random_sn(rng, **kw) for _ in range(rng.randint(0, max_width)))


def random_infinite_sn(rng: random.Random, **kw) -> SupernaturalNumber:
    while True:
        n = random_sn(rng, **kw)
        if row_is_infinite(n):
            return n


def random_solenoid_char(rng: random.Random) -> SupernaturalNumber:
    while True:
        n = random_infinite_sn(rng)
        if n != ALL_INF:
            return n


def random_base(rng: random.Random, max_width: int = 3) -> FgProfiniteGroup:
    """A standardized group whose rows are all infinite (width >= 1)."""
    while True:
        rows = [random_infinite_sn(rng) for _ in range(rng.randint(1, max_width))]
        S = standardize(FgProfiniteGroup(rows))
        if all(row_is_infinite(r) for r in S.rows):
            return S


def random_lattice_element(rng: random.Random, base: FgProfiniteGroup) -> LatticeElement:
    x = LatticeElement(base)
    for _ in range(rng.randint(0, 3)):
        k = rng.choice((2, 3, 4, 5, 6, 9, 10, 12))
        x = scale(x, k) if rng.random() < 0.5 else preimage_mu(x, k)
    return x


def perturb_sn(rng: random.Random, n: SupernaturalNumber, primes=SMALL_PRIMES) -> SupernaturalNumber:
    """Change finitely many finite exponents, keeping the type class."""
    exc = n.exceptions
    for p in rng.sample(primes, rng.randint(0, 3)):
        if n[p] != INF:
            exc[p] = rng.randint(0, 5)
    return SupernaturalNumber(n.default, exc)


def random_finite_row(rng: random.Random) -> SupernaturalNumber:
    return SupernaturalNumber(0, {p: rng.randint(1, 4) for p in rng.sample(SMALL_PRIMES, rng.randint(1, 3))})


def perturb_group(rng: random.Random, D: FgProfiniteGroup) -> FgProfiniteGroup:
    """An isogenous group: finite exponent changes, finite rows added or removed."""
    rows = [perturb_sn(rng, r) for r in D.rows]
    rows = [r for r in rows if row_is_infinite(r) or rng.random() < 0.5]
    rows += [random_finite_row(rng) for _ in range(rng.randint(0, 2))]
    rng.shuffle(rows)
    return FgProfiniteGroup(rows)


def random_protorus(rng: random.Random, torus_free: bool = False) -> ProtorusDescriptor:
    return ProtorusDescriptor(
        rng.randint(0, 2),
        0 if torus_free else rng.randint(0, 2),
        tuple(random_solenoid_char(rng) for _ in range(rng.randint(0, 3))),
    )


def random_cd(rng: random.Random) -> CdGroupDescriptor:
    return CdGroupDescriptor(
        rng.randint(0, 2),
        rng.randint(0, 2),
        tuple(random_solenoid_char(rng) for _ in range(rng.randint(0, 3))),
    )


def perturb_cd(rng: random.Random, A: CdGroupDescriptor) -> CdGroupDescriptor:
    types = [perturb_sn(rng, t) for t in A.types]
    rng.shuffle(types)
    return CdGroupDescriptor(A.divisible_rank, A.free_rank, tuple(types))
