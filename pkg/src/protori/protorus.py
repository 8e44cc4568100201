"""Descriptors of completely factorable protori.

A completely factorable protorus is a finite product of one-dimensional
protori.  Up to topological isomorphism it is recorded by three pieces of
data: the number of ``Q^`` factors (duals of the rationals), the number of
circle factors, and the characteristics of the remaining solenoids.  A
solenoid with characteristic ``n`` contains ``Delta(n) = prod_p Zhat(p**n_p)``
with circle quotient.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

from .errors import InvalidDescriptor, NotTorusFree
from .lattice import LatticeElement
from .profinite import (
    FgProfiniteGroup,
    KernelDescriptor,
    kernel_descriptor,
    row_is_infinite,
    standardize,
    verify_exactness,
)
from .supernatural import INF, SupernaturalNumber, type_key

__all__ = [
    "ProtorusDescriptor",
    "TildeDeltaStructure",
    "Extension",
    "ALL_INF",
    "from_profinite",
    "decompose",
    "dim",
    "dim_na",
    "tilde_delta",
    "torsion_structure",
    "projective_resolution",
    "isogenous_protori",
    "characteristic_rows",
]

ALL_INF = SupernaturalNumber(INF)


def _natural(name: str, v) -> int:
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise InvalidDescriptor(f"{name} must be a natural number, got {v!r}")
    return v


def _sort_key(n: SupernaturalNumber):
    # deterministic order for a multiset of characteristics
    return (n.default, n.primes(), tuple(n[p] for p in n.primes()))


def sort_characteristics(chars: Iterable[SupernaturalNumber]) -> tuple[SupernaturalNumber, ...]:
    return tuple(sorted(chars, key=_sort_key))


@dataclass(frozen=True)
class ProtorusDescriptor:
    """``(Q^)^divisible_rank x T^torus_rank x prod(solenoids)``.

    The constructor is strict: a characteristic whose one-row group is finite
    belongs in ``torus_rank`` and the all-INF characteristic belongs in
    ``divisible_rank``; both raise.  :meth:`from_characteristics` routes them
    instead.
    """

    divisible_rank: int = 0
    torus_rank: int = 0
    solenoids: tuple[SupernaturalNumber, ...] = field(default=())

    def __post_init__(self):
        _natural("divisible_rank", self.divisible_rank)
        _natural("torus_rank", self.torus_rank)
        chars = tuple(self.solenoids)
        for c in chars:
            if not isinstance(c, SupernaturalNumber):
                raise TypeError("solenoid characteristics must be SupernaturalNumber")
            if not row_is_infinite(c):
                raise InvalidDescriptor(
                    f"{c!r} is type-equivalent to 1; its solenoid is a circle"
                )
            if c == ALL_INF:
                raise InvalidDescriptor("the all-INF solenoid is Q^; count it in divisible_rank")
        object.__setattr__(self, "solenoids", sort_characteristics(chars))

    @classmethod
    def from_characteristics(
        cls,
        chars: Iterable[SupernaturalNumber],
        divisible_rank: int = 0,
        torus_rank: int = 0,
    ) -> ProtorusDescriptor:
        """Build from arbitrary characteristics, routing circles and ``Q^`` factors."""
        sol = []
        for c in chars:
            if not row_is_infinite(c):
                torus_rank += 1
            elif c == ALL_INF:
                divisible_rank += 1
            else:
                sol.append(c)
        return cls(divisible_rank, torus_rank, tuple(sol))

    @property
    def is_torus_free(self) -> bool:
        return self.torus_rank == 0

    def to_json(self) -> dict:
        return {
            "divisible_rank": self.divisible_rank,
            "torus_rank": self.torus_rank,
            "solenoids": [c.to_json() for c in self.solenoids],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> ProtorusDescriptor:
        return cls(
            data.get("divisible_rank", 0),
            data.get("torus_rank", 0),
            tuple(SupernaturalNumber.from_json(c) for c in data.get("solenoids", [])),
        )


@dataclass(frozen=True)
class TildeDeltaStructure:
    """Per-prime pair ``(r_p, c_p)``: ``Q_p**r_p x Z(p**inf)**c_p``.

    Stored as a default pair and a finite table of exceptional primes.
    """

    dim_na: int
    default: tuple[int, int]
    exceptions: tuple[tuple[int, tuple[int, int]], ...] = ()

    def __post_init__(self):
        for _, (r, c) in ((None, self.default), *self.exceptions):
            if not (0 <= r <= self.dim_na and r + c == self.dim_na):
                raise AssertionError(f"bad tilde-delta pair {(r, c)} for dim_nA {self.dim_na}")

    def at(self, p: int) -> tuple[int, int]:
        return dict(self.exceptions).get(p, self.default)

    def p_adic_rank(self, p: int) -> int:
        return self.at(p)[0]

    def to_json(self) -> dict:
        return {
            "dim_na": self.dim_na,
            "default": {"r": self.default[0], "c": self.default[1]},
            "exceptions": {str(p): {"r": r, "c": c} for p, (r, c) in self.exceptions},
        }


class Extension(NamedTuple):
    """Result of :func:`from_profinite`.

    ``subgroup`` is the embedded profinite subgroup of the torus-free factors;
    ``finite_rows`` are the cyclic subgroups ``(1/r)Z/Z`` placed in circle
    factors, one per circle.
    """

    protorus: ProtorusDescriptor
    subgroup: LatticeElement
    finite_rows: FgProfiniteGroup

    def realized_group(self) -> FgProfiniteGroup:
        return standardize(FgProfiniteGroup(self.subgroup.realize().rows + self.finite_rows.rows))


def characteristic_rows(K: ProtorusDescriptor) -> FgProfiniteGroup:
    """One row per non-circle factor: all-INF rows for ``Q^``, then the solenoids."""
    return FgProfiniteGroup((ALL_INF,) * K.divisible_rank + K.solenoids)


def from_profinite(D: FgProfiniteGroup) -> Extension:
    """A completely factorable protorus containing ``D`` with torus quotient.

    Finite rows go into circle factors, infinite rows become solenoids with
    that row as characteristic.
    """
    S = standardize(D)
    infinite = [r for r in S.rows if row_is_infinite(r)]
    finite = [r for r in S.rows if not row_is_infinite(r)]
    K = ProtorusDescriptor.from_characteristics(infinite, torus_rank=len(finite))
    return Extension(K, LatticeElement(FgProfiniteGroup(infinite)), FgProfiniteGroup(finite))


def decompose(K: ProtorusDescriptor) -> tuple[int, int, ProtorusDescriptor]:
    return K.divisible_rank, K.torus_rank, ProtorusDescriptor(0, 0, K.solenoids)


def dim(K: ProtorusDescriptor) -> int:
    return K.divisible_rank + K.torus_rank + len(K.solenoids)


def dim_na(K: ProtorusDescriptor) -> int:
    """Circle factors contribute nothing; every other factor contributes one."""
    return K.divisible_rank + len(K.solenoids)


def _require_torus_free(K: ProtorusDescriptor):
    if K.torus_rank:
        raise NotTorusFree(f"descriptor has {K.torus_rank} circle factor(s)")


def tilde_delta(K: ProtorusDescriptor) -> TildeDeltaStructure:
    """The union of all of L(K) as ``prod_p [Q_p**r_p x Z(p**inf)**c_p]``.

    ``r_p`` counts factors whose characteristic is infinite at p.
    """
    _require_torus_free(K)
    n = dim_na(K)
    chars = characteristic_rows(K).rows
    r_default = sum(c.default == INF for c in chars)
    primes = sorted({p for c in chars for p in c.primes()})
    exceptions = []
    for p in primes:
        r = sum(c[p] == INF for c in chars)
        if r != r_default:
            exceptions.append((p, (r, n - r)))
    return TildeDeltaStructure(n, (r_default, n - r_default), tuple(exceptions))


def torsion_structure(K: ProtorusDescriptor) -> SupernaturalNumber:
    """``c_p`` in ``tor(K) = (+)_p Z(p**inf)**c_p``, as an eventually-constant map.

    The map is returned as a :class:`SupernaturalNumber` whose exponent at p
    is ``c_p``; it is a bookkeeping container, not a characteristic.
    """
    T = tilde_delta(K)
    return SupernaturalNumber(T.default[1], {p: c for p, (_, c) in T.exceptions})


def projective_resolution(K: ProtorusDescriptor) -> tuple[KernelDescriptor, int]:
    """``K(n) >-> Zhat**r ->> Delta(n)`` for the characteristic rows of ``K``.

    Returns the kernel flags, one row per factor, and ``r = dim K``.
    """
    _require_torus_free(K)
    rows = characteristic_rows(K)
    if not verify_exactness(rows):
        raise AssertionError("exactness self-check failed")
    return kernel_descriptor_rows(rows), dim(K)


def kernel_descriptor_rows(rows: FgProfiniteGroup) -> KernelDescriptor:
    """Kernel flags row by row, without re-standardizing (one row per factor)."""
    return KernelDescriptor(
        tuple(kernel_descriptor(FgProfiniteGroup([r])).rows[0] for r in rows.rows)
    )


def isogenous_protori(K1: ProtorusDescriptor, K2: ProtorusDescriptor) -> bool:
    """Equal ranks and solenoid characteristics matching up to type."""
    return (
        K1.divisible_rank == K2.divisible_rank
        and K1.torus_rank == K2.torus_rank
        and Counter(map(type_key, K1.solenoids)) == Counter(map(type_key, K2.solenoids))
    )

