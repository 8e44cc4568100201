"""Completely decomposable torsion-free groups and the duality dictionary.

A completely decomposable group ``Q**r (+) Z**s (+) A_1 (+) ... (+) A_t`` is
recorded by ``r``, ``s`` and the characteristics of the rank-one summands
``A_i``.  Pontryagin duality sends it to the protorus
``(Q^)**r x T**s x prod(solenoid with characteristic of A_i)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import DimMismatch, InvalidDescriptor
from .profinite import row_is_infinite
from .protorus import (
    ALL_INF,
    ProtorusDescriptor,
    characteristic_rows,
    dim,
    dim_na,
    sort_characteristics,
)
from .supernatural import SupernaturalNumber, type_key

__all__ = [
    "CdGroupDescriptor",
    "dual_of_cd",
    "cd_of_dual",
    "quasi_isomorphic",
    "acd_witness",
]


@dataclass(frozen=True)
class CdGroupDescriptor:
    divisible_rank: int = 0
    free_rank: int = 0
    types: tuple[SupernaturalNumber, ...] = field(default=())

    def __post_init__(self):
        for name in ("divisible_rank", "free_rank"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise InvalidDescriptor(f"{name} must be a natural number, got {v!r}")
        chars = tuple(self.types)
        for c in chars:
            if not isinstance(c, SupernaturalNumber):
                raise TypeError("types must be SupernaturalNumber")
            if not row_is_infinite(c):
                raise InvalidDescriptor(f"{c!r} is the type of Z; count it in free_rank")
            if c == ALL_INF:
                raise InvalidDescriptor("the all-INF type is Q; count it in divisible_rank")
        object.__setattr__(self, "types", sort_characteristics(chars))

    @classmethod
    def from_characteristics(
        cls,
        chars: Iterable[SupernaturalNumber],
        divisible_rank: int = 0,
        free_rank: int = 0,
    ) -> CdGroupDescriptor:
        types = []
        for c in chars:
            if not row_is_infinite(c):
                free_rank += 1
            elif c == ALL_INF:
                divisible_rank += 1
            else:
                types.append(c)
        return cls(divisible_rank, free_rank, tuple(types))

    @property
    def rank(self) -> int:
        return self.divisible_rank + self.free_rank + len(self.types)

    def to_json(self) -> dict:
        return {
            "divisible_rank": self.divisible_rank,
            "free_rank": self.free_rank,
            "types": [c.to_json() for c in self.types],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> CdGroupDescriptor:
        return cls(
            data.get("divisible_rank", 0),
            data.get("free_rank", 0),
            tuple(SupernaturalNumber.from_json(c) for c in data.get("types", [])),
        )


def dual_of_cd(A: CdGroupDescriptor) -> ProtorusDescriptor:
    return ProtorusDescriptor(A.divisible_rank, A.free_rank, A.types)


def cd_of_dual(K: ProtorusDescriptor) -> CdGroupDescriptor:
    return CdGroupDescriptor(K.divisible_rank, K.torus_rank, K.solenoids)


def quasi_isomorphic(A: CdGroupDescriptor, B: CdGroupDescriptor) -> bool:
    """Equal ranks and type multisets matching up to type equivalence."""
    return (
        A.divisible_rank == B.divisible_rank
        and A.free_rank == B.free_rank
        and Counter(map(type_key, A.types)) == Counter(map(type_key, B.types))
    )


def acd_witness(K: ProtorusDescriptor) -> CdGroupDescriptor:
    """A completely decomposable group quasi-isomorphic to the dual of ``K``.

    Needs ``dim K == dim_nA K``.  The witness takes one rank-one summand per
    row of the base subgroup built from the factors of ``K``; all-INF rows
    become ``Q`` summands.
    """
    if dim(K) != dim_na(K):
        raise DimMismatch(f"dim {dim(K)} != dim_nA {dim_na(K)}")
    return CdGroupDescriptor.from_characteristics(characteristic_rows(K).rows)

