"""Supernatural numbers with finitely many exceptional primes.

A supernatural number is a formal product ``prod_p p**n_p`` with each exponent
a non-negative integer or infinity.  Only the eventually-constant ones are
representable here: a ``default`` exponent shared by all but finitely many
primes, plus a finite table of exceptions.

>>> n = SupernaturalNumber(0, {2: INF, 3: 2})
>>> n[2], n[3], n[5]
(inf, 2, 0)
>>> sn_mul(n, SupernaturalNumber(1))
SupernaturalNumber(default=1, exceptions={2: inf, 3: 3})
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Union

from sympy import isprime

from .errors import InvalidExponent, InvalidPrime

__all__ = [
    "INF",
    "Exponent",
    "SupernaturalNumber",
    "ONE",
    "check_prime",
    "check_exponent",
    "sn_exponent",
    "sn_mul",
    "sn_min",
    "sn_max",
    "sn_divides",
    "sn_is_finite",
    "sn_type_equivalent",
    "type_key",
]

INF = math.inf
Exponent = Union[int, float]

MAX_PRIME = 2**63 - 1


def check_prime(p) -> int:
    if isinstance(p, bool) or not isinstance(p, int):
        raise InvalidPrime(f"prime must be an int, got {p!r}")
    if p > MAX_PRIME:
        raise InvalidPrime(f"prime {p} exceeds 2**63 - 1")
    if not isprime(p):
        raise InvalidPrime(f"{p} is not prime")
    return p


def check_exponent(e) -> Exponent:
    if e == INF:
        return INF
    if isinstance(e, bool) or not isinstance(e, int):
        raise InvalidExponent(f"exponent must be a natural number or INF, got {e!r}")
    if e < 0:
        raise InvalidExponent(f"exponent must be non-negative, got {e}")
    return e


def _fmt_exp(e: Exponent) -> str:
    return "inf" if e == INF else str(e)


class SupernaturalNumber:
    """An eventually-constant supernatural number.

    Instances are immutable and hashable.  The constructor checks that every
    exception key is prime and drops exceptions equal to the default, so two
    numbers with the same exponents at every prime compare equal.
    """

    __slots__ = ("_default", "_exceptions", "_hash")

    def __init__(self, default: Exponent = 0, exceptions: Mapping[int, Exponent] | None = None):
        default = check_exponent(default)
        items = []
        for p, e in (exceptions or {}).items():
            check_prime(p)
            e = check_exponent(e)
            if e != default:
                items.append((p, e))
        items.sort()
        self._default = default
        self._exceptions = tuple(items)
        self._hash = hash((default, self._exceptions))

    @classmethod
    def _raw(cls, default: Exponent, items: Iterable[tuple[int, Exponent]]) -> SupernaturalNumber:
        # trusted path: keys already known prime, exponents valid
        self = object.__new__(cls)
        self._default = default
        self._exceptions = tuple(sorted((p, e) for p, e in items if e != default))
        self._hash = hash((default, self._exceptions))
        return self

    @property
    def default(self) -> Exponent:
        return self._default

    @property
    def exceptions(self) -> dict[int, Exponent]:
        return dict(self._exceptions)

    def primes(self) -> tuple[int, ...]:
        """The exceptional primes, ascending."""
        return tuple(p for p, _ in self._exceptions)

    def __getitem__(self, p: int) -> Exponent:
        for q, e in self._exceptions:
            if q == p:
                return e
        return self._default

    def __eq__(self, other):
        if not isinstance(other, SupernaturalNumber):
            return NotImplemented
        return self._default == other._default and self._exceptions == other._exceptions

    def __hash__(self):
        return self._hash

    def __mul__(self, other):
        if not isinstance(other, SupernaturalNumber):
            return NotImplemented
        return sn_mul(self, other)

    def __repr__(self):
        exc = ", ".join(f"{p}: {_fmt_exp(e)}" for p, e in self._exceptions)
        return f"SupernaturalNumber(default={_fmt_exp(self._default)}, exceptions={{{exc}}})"

    def to_json(self) -> dict:
        return {
            "default": _fmt_exp(self._default),
            "exceptions": {str(p): _fmt_exp(e) for p, e in self._exceptions},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> SupernaturalNumber:
        def exp(v):
            if isinstance(v, str):
                if v == "inf":
                    return INF
                if not v.isdigit():
                    raise InvalidExponent(f"bad exponent {v!r}")
                return int(v)
            return v

        exceptions = {}
        for k, v in data.get("exceptions", {}).items():
            try:
                p = int(k)
            except ValueError:
                raise InvalidPrime(f"bad prime key {k!r}") from None
            exceptions[p] = exp(v)
        return cls(exp(data.get("default", "0")), exceptions)


ONE = SupernaturalNumber(0)


def _pointwise(a: SupernaturalNumber, b: SupernaturalNumber, op) -> SupernaturalNumber:
    keys = set(a.primes()) | set(b.primes())
    return SupernaturalNumber._raw(op(a.default, b.default), ((p, op(a[p], b[p])) for p in keys))


def sn_exponent(n: SupernaturalNumber, p: int) -> Exponent:
    """The exponent of ``p`` in ``n``."""
    check_prime(p)
    return n[p]


def sn_mul(r: SupernaturalNumber, n: SupernaturalNumber) -> SupernaturalNumber:
    """Product: exponents add, with ``k + INF = INF``."""
    return _pointwise(r, n, lambda x, y: x + y)


def sn_min(a: SupernaturalNumber, b: SupernaturalNumber) -> SupernaturalNumber:
    return _pointwise(a, b, min)


def sn_max(a: SupernaturalNumber, b: SupernaturalNumber) -> SupernaturalNumber:
    return _pointwise(a, b, max)


def sn_divides(a: SupernaturalNumber, b: SupernaturalNumber) -> bool:
    if a.default > b.default:
        return False
    return all(a[p] <= b[p] for p in set(a.primes()) | set(b.primes()))


def sn_is_finite(n: SupernaturalNumber) -> bool:
    """True when every exponent is finite (the integer named may still be infinite)."""
    return n.default != INF and all(e != INF for _, e in n._exceptions)


def type_key(n: SupernaturalNumber) -> tuple:
    """A hashable key identifying the type class of ``n``.

    Two characteristics are type-equivalent exactly when their keys agree:
    same default, and the same primes at which finiteness flips relative to
    the default.  The key is not itself a supernatural number.
    """
    inf_default = n.default == INF
    flips = frozenset(p for p, e in n._exceptions if (e == INF) != inf_default)
    return (n.default, flips)


def sn_type_equivalent(a: SupernaturalNumber, b: SupernaturalNumber) -> bool:
    """Equal up to finite discrepancies at finitely many primes."""
    if a.default != b.default:
        return False
    for p in set(a.primes()) | set(b.primes()):
        x, y = a[p], b[p]
        if x != y and (x == INF or y == INF):
            return False
    return True
