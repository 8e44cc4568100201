"""Brute-force finite abelian group oracle.

Symbolic groups are truncated to finite groups over a finite set of primes,
and quotients are recomputed here without touching the symbolic formulas:
structurally by gcd arithmetic on each cyclic factor, and for small groups by
enumerating every element.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .profinite import FgProfiniteGroup
from .supernatural import INF, check_prime

__all__ = [
    "FiniteAbelianGroup",
    "truncate",
    "fab_quotient_mod_k",
    "fab_quotient_by_enumeration",
    "fab_iso",
]

ENUMERATION_LIMIT = 10**4


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            while q % p == 0:
                q //= p
                e += 1
            if q != 1:
                raise ValueError("not a prime power")
            return p, e
    raise ValueError("not a prime power")


def _ilog(n: int, p: int) -> int:
    e = 0
    while n > 1:
        n, r = divmod(n, p)
        if r:
            raise ArithmeticError("torsion subgroup order is not a prime power")
        e += 1
    return e


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """A finite abelian group as a sorted tuple of ``(p, e)``, one per ``Z(p**e)``."""

    cyclic_factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for p, e in self.cyclic_factors:
            if e < 1:
                raise ValueError(f"cyclic factor exponent must be >= 1, got {e}")
        object.__setattr__(self, "cyclic_factors", tuple(sorted(self.cyclic_factors)))

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> FiniteAbelianGroup:
        return cls(tuple(_prime_power(q) for q in orders if q != 1))

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(p**e for p, e in self.cyclic_factors)

    def order(self) -> int:
        return math.prod(self.orders)

    def rank(self) -> int:
        """Minimal number of generators."""
        counts = Counter(p for p, _ in self.cyclic_factors)
        return max(counts.values(), default=0)

    def __str__(self):
        if not self.cyclic_factors:
            return "0"
        return " x ".join(f"Z({p}^{e})" for p, e in self.cyclic_factors)


def truncate(D: FgProfiniteGroup, primes: Iterable[int], cap: int) -> FiniteAbelianGroup:
    """Each row contributes ``Z(p**min(r_p, cap))`` for ``p`` in ``primes``."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    primes = sorted({check_prime(p) for p in primes})
    factors = []
    for row in D.rows:
        for p in primes:
            e = row[p]
            e = cap if e == INF else min(e, cap)
            if e:
                factors.append((p, e))
    return FiniteAbelianGroup(tuple(factors))


def fab_quotient_mod_k(F: FiniteAbelianGroup, k: int) -> FiniteAbelianGroup:
    """``F / kF`` by gcd arithmetic: ``Z(n) / kZ(n) = Z(gcd(n, k))``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return FiniteAbelianGroup.from_orders(math.gcd(q, k) for q in F.orders)


def fab_quotient_by_enumeration(F: FiniteAbelianGroup, k: int) -> FiniteAbelianGroup:
    """``F / kF`` by listing elements; only for groups of order <= 10**4.

    For each prime ``p`` the quotient's p-part is read off from the sizes of
    its ``p**i``-torsion subgroups, ``|Q[p**i]| = |{x : p**i x in kF}| / |kF|``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if F.order() > ENUMERATION_LIMIT:
        raise ValueError(f"group of order {F.order()} is too large to enumerate")
    mods = F.orders
    elements = list(itertools.product(*(range(q) for q in mods)))

    def mul(n, x):
        return tuple(n * xi % q for xi, q in zip(x, mods))

    kF = {mul(k, x) for x in elements}
    q_order = len(elements) // len(kF)
    factors = []
    p = 2
    rest = q_order
    while rest > 1:
        if rest % p:
            p += 1
            continue
        while rest % p == 0:
            rest //= p
        logs = [0]
        i = 0
        while True:
            i += 1
            count = sum(1 for x in elements if mul(p**i, x) in kF) // len(kF)
            logs.append(_ilog(count, p))
            if logs[-1] == logs[-2]:
                break
        # factors with exponent >= i number logs[i] - logs[i-1]
        at_least = [logs[i] - logs[i - 1] for i in range(1, len(logs))]
        for i, n in enumerate(at_least, start=1):
            nxt = at_least[i] if i < len(at_least) else 0
            factors.extend([(p, i)] * (n - nxt))
        p += 1
    return FiniteAbelianGroup(tuple(factors))


def fab_iso(F1: FiniteAbelianGroup, F2: FiniteAbelianGroup) -> bool:
    return Counter(F1.cyclic_factors) == Counter(F2.cyclic_factors)
