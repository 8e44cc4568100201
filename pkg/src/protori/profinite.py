"""Finitely generated profinite abelian groups as rows of supernatural numbers.

Row ``j`` of a group stands for ``prod_p Zhat(p**r_p(j))``, where
``Zhat(p**inf)`` is the p-adic integers and ``Zhat(p**0)`` is trivial.  The
standard representation sorts every per-prime column in descending order and
drops trailing zero rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from sympy import factorint

from .errors import InvalidScalar
from .supernatural import INF, SupernaturalNumber, check_prime

__all__ = [
    "FgProfiniteGroup",
    "KernelRow",
    "KernelDescriptor",
    "NaInvariants",
    "standardize",
    "na_invariants",
    "quotient_mod_k",
    "scalar_mul",
    "kernel_descriptor",
    "verify_exactness",
    "isogenous",
    "factor_scalar",
    "row_is_infinite",
]


def row_is_infinite(row: SupernaturalNumber) -> bool:
    """Whether ``prod_p Zhat(p**row_p)`` is an infinite group."""
    return row.default > 0 or any(e == INF for e in row.exceptions.values())


def factor_scalar(k) -> dict[int, int]:
    if isinstance(k, bool) or not isinstance(k, int):
        raise InvalidScalar(f"scalar must be a positive integer, got {k!r}")
    if k < 1:
        raise InvalidScalar(f"scalar must be positive, got {k}")
    return {int(p): int(a) for p, a in factorint(k).items()}


class FgProfiniteGroup:
    """An immutable finitely generated profinite abelian group.

    ``rows`` may be given in any order; call :func:`standardize` for the normal
    form.  Equality is row-by-row; compare standardized groups to test
    isomorphism.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[SupernaturalNumber] = ()):
        rows = tuple(rows)
        for r in rows:
            if not isinstance(r, SupernaturalNumber):
                raise TypeError(f"rows must be SupernaturalNumber, got {type(r).__name__}")
        self._rows = rows

    @classmethod
    def trivial(cls) -> FgProfiniteGroup:
        return cls(())

    @classmethod
    def zhat(cls, m: int = 1) -> FgProfiniteGroup:
        return cls([SupernaturalNumber(INF)] * m)

    @classmethod
    def p_adic(cls, p: int) -> FgProfiniteGroup:
        return cls([SupernaturalNumber(0, {check_prime(p): INF})])

    @classmethod
    def cyclic(cls, n: int) -> FgProfiniteGroup:
        """The finite cyclic group Z(n) as a single row (no rows when n == 1)."""
        exps = factor_scalar(n)
        return cls([SupernaturalNumber(0, exps)] if exps else [])

    @property
    def rows(self) -> tuple[SupernaturalNumber, ...]:
        return self._rows

    @property
    def width(self) -> int:
        return len(self._rows)

    @property
    def is_normalized(self) -> bool:
        rows = self._rows
        if rows and rows[-1] == SupernaturalNumber(0):
            return False
        primes = {p for r in rows for p in r.primes()}
        for a, b in zip(rows, rows[1:]):
            if a.default < b.default or any(a[p] < b[p] for p in primes):
                return False
        return True

    def is_finite(self) -> bool:
        return not any(row_is_infinite(r) for r in self._rows)

    def order(self):
        """Group order: an int for finite groups, INF otherwise."""
        if not self.is_finite():
            return INF
        n = 1
        for r in self._rows:
            for p, e in r.exceptions.items():
                n *= p**e
        return n

    def __eq__(self, other):
        if not isinstance(other, FgProfiniteGroup):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __len__(self):
        return len(self._rows)

    def __repr__(self):
        return f"FgProfiniteGroup({list(self._rows)!r})"

    def to_json(self) -> dict:
        return {"rows": [r.to_json() for r in self._rows]}

    @classmethod
    def from_json(cls, data: Mapping) -> FgProfiniteGroup:
        return cls(SupernaturalNumber.from_json(r) for r in data["rows"])


@dataclass(frozen=True)
class NaInvariants:
    width: int
    dimension: int

    def to_json(self) -> dict:
        return {"width": self.width, "dimension": self.dimension}


@dataclass(frozen=True)
class KernelRow:
    """Per-prime FREE/ZERO flags for one row of the kernel ``K(n)``.

    The flag is ``default_free`` at every prime except those in ``flipped``.
    FREE at p means the p-part ``p**n_p Zhat_p`` is a rank-one free module;
    ZERO means ``n_p`` is infinite and the p-part vanishes.
    """

    default_free: bool
    flipped: frozenset = frozenset()

    def is_free(self, p: int) -> bool:
        return self.default_free != (p in self.flipped)

    def to_json(self) -> dict:
        return {
            "default": "free" if self.default_free else "zero",
            "exceptions": sorted(self.flipped),
        }


@dataclass(frozen=True)
class KernelDescriptor:
    rows: tuple[KernelRow, ...]

    def to_json(self) -> dict:
        return {"rows": [r.to_json() for r in self.rows]}


def standardize(D: FgProfiniteGroup) -> FgProfiniteGroup:
    """Sort every per-prime column in descending order and drop zero rows."""
    rows = D.rows
    if not rows:
        return D
    primes = sorted({p for r in rows for p in r.primes()})
    defaults = sorted((r.default for r in rows), reverse=True)
    columns = {p: sorted((r[p] for r in rows), reverse=True) for p in primes}
    out = [
        SupernaturalNumber._raw(defaults[j], ((p, columns[p][j]) for p in primes))
        for j in range(len(rows))
    ]
    zero = SupernaturalNumber(0)
    while out and out[-1] == zero:
        out.pop()
    return FgProfiniteGroup(out)


def na_invariants(D: FgProfiniteGroup) -> NaInvariants:
    S = standardize(D)
    return NaInvariants(S.width, sum(1 for r in S.rows if row_is_infinite(r)))


def quotient_mod_k(D: FgProfiniteGroup, k: int) -> FgProfiniteGroup:
    """``D / kD``: each row keeps ``min(r_p, v_p(k))`` at primes dividing k."""
    val = factor_scalar(k)
    rows = [
        SupernaturalNumber._raw(0, ((p, min(r[p], a)) for p, a in val.items()))
        for r in D.rows
    ]
    return standardize(FgProfiniteGroup(rows))


def scalar_mul(D: FgProfiniteGroup, k: int) -> FgProfiniteGroup:
    """``kD``: finite exponents drop by ``v_p(k)`` (clamped at 0), INF stays."""
    val = factor_scalar(k)
    rows = []
    for r in D.rows:
        exc = r.exceptions
        for p, a in val.items():
            e = r[p]
            exc[p] = e if e == INF else max(e - a, 0)
        rows.append(SupernaturalNumber._raw(r.default, exc.items()))
    return standardize(FgProfiniteGroup(rows))


def kernel_descriptor(D: FgProfiniteGroup) -> KernelDescriptor:
    """Flags of ``K(n) = prod_j prod_p p**n_jp Zhat_p`` with ``Zhat^m / K(n) = D``."""
    out = []
    for r in standardize(D).rows:
        default_free = r.default != INF
        flipped = frozenset(p for p, e in r.exceptions.items() if (e != INF) != default_free)
        out.append(KernelRow(default_free, flipped))
    return KernelDescriptor(tuple(out))


def verify_exactness(D: FgProfiniteGroup) -> bool:
    """Rebuild ``Zhat^m / K(n)`` from the kernel flags and compare with ``D``.

    At a FREE prime the factor is ``Zhat_p / p**n Zhat_p = Z(p**n)`` with ``n``
    read off as the kernel's index exponent; at a ZERO prime it is
    ``Zhat_p / 0 = Zhat_p``.
    """
    S = standardize(D)
    K = kernel_descriptor(S)
    if len(K.rows) != S.width:
        return False
    rebuilt = []
    for row, krow in zip(S.rows, K.rows):
        # FREE: index exponent n of p**n Zhat_p, which must be finite
        def part(free: bool, e):
            if free:
                return e if e != INF else None
            return INF if e == INF else None

        d = part(krow.default_free, row.default)
        exc = {p: part(krow.is_free(p), row[p]) for p in set(row.primes()) | krow.flipped}
        if d is None or None in exc.values():
            return False
        rebuilt.append(SupernaturalNumber(d, exc))
    return standardize(FgProfiniteGroup(rebuilt)) == S


def _padded(values: Sequence, width: int) -> list:
    return sorted(list(values) + [0] * (width - len(values)), reverse=True)


def isogenous(D: FgProfiniteGroup, E: FgProfiniteGroup) -> bool:
    """Decide isogeny of finitely generated profinite abelian groups.

    Isogenous means mutual morphisms with finite cokernels.  On
    eventually-constant data this holds iff the p-adic free ranks agree at
    every prime and the full exponent columns agree (as multisets, padded with
    zeros) at all but finitely many primes.  The second condition reduces to
    the default columns; the first is checked at the finitely many
    exceptional primes.
    """
    S, T = standardize(D), standardize(E)
    m = max(S.width, T.width)
    if _padded([r.default for r in S.rows], m) != _padded([r.default for r in T.rows], m):
        return False
    primes = {p for G in (S, T) for r in G.rows for p in r.primes()}
    for p in primes:
        if sum(r[p] == INF for r in S.rows) != sum(r[p] == INF for r in T.rows):
            return False
    return True
