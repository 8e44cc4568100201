"""Product-form elements of the lattice L(G) of a torus-free protorus.

An element is described relative to a fixed base subgroup ``prod_j Delta_j``
(standard representation, every row infinite).  At a coordinate ``(j, p)``
where the base exponent is infinite the element's component is
``p**a Zhat_p`` inside ``Q_p``; we store the offset ``a`` (any integer).  Where
the base exponent ``n`` is finite the component is ``Z(p**b)`` inside
``Z(p**inf)``; we store the level ``b >= 0``, defaulting to ``n``.

Containment is coordinatewise: larger offsets and smaller levels mean smaller
subgroups.
"""

from __future__ import annotations

from typing import Mapping

from .errors import InvalidDescriptor, MismatchedBase, NotContained
from .profinite import FgProfiniteGroup, factor_scalar, row_is_infinite, standardize
from .supernatural import INF, SupernaturalNumber, check_prime

__all__ = [
    "LatticeElement",
    "meet",
    "join",
    "leq",
    "index",
    "scale",
    "preimage_mu",
    "find_conductor",
]


class LatticeElement:
    __slots__ = ("_base", "_offsets", "_levels")

    def __init__(
        self,
        base: FgProfiniteGroup,
        free_offsets: Mapping[tuple[int, int], int] | None = None,
        torsion_levels: Mapping[tuple[int, int], int] | None = None,
    ):
        if not base.is_normalized:
            raise InvalidDescriptor("lattice base must be in standard representation")
        if not all(row_is_infinite(r) for r in base.rows):
            raise InvalidDescriptor("lattice base rows must all be infinite")
        rows = base.rows
        offsets = {}
        for (j, p), a in (free_offsets or {}).items():
            self._check_coord(rows, j, p)
            if rows[j][p] != INF:
                raise InvalidDescriptor(f"({j}, {p}) is a torsion coordinate, not free")
            if isinstance(a, bool) or not isinstance(a, int):
                raise InvalidDescriptor(f"offset must be an int, got {a!r}")
            if a:
                offsets[j, p] = a
        levels = {}
        for (j, p), b in (torsion_levels or {}).items():
            self._check_coord(rows, j, p)
            n = rows[j][p]
            if n == INF:
                raise InvalidDescriptor(f"({j}, {p}) is a free coordinate, not torsion")
            if isinstance(b, bool) or not isinstance(b, int) or b < 0:
                raise InvalidDescriptor(f"level must be a natural number, got {b!r}")
            if b != n:
                levels[j, p] = b
        self._base = base
        self._offsets = dict(sorted(offsets.items()))
        self._levels = dict(sorted(levels.items()))

    @staticmethod
    def _check_coord(rows, j, p):
        if not 0 <= j < len(rows):
            raise InvalidDescriptor(f"row index {j} out of range")
        check_prime(p)

    @classmethod
    def from_base(cls, base: FgProfiniteGroup) -> LatticeElement:
        """The base subgroup itself, standardized."""
        return cls(standardize(base))

    @property
    def base(self) -> FgProfiniteGroup:
        return self._base

    @property
    def free_offsets(self) -> dict[tuple[int, int], int]:
        return dict(self._offsets)

    @property
    def torsion_levels(self) -> dict[tuple[int, int], int]:
        return dict(self._levels)

    def offset(self, j: int, p: int) -> int:
        return self._offsets.get((j, p), 0)

    def level(self, j: int, p: int) -> int:
        return self._levels.get((j, p), self._base.rows[j][p])

    def realize(self) -> FgProfiniteGroup:
        """The element as an abstract profinite group (``p**a Zhat_p`` is ``Zhat_p``)."""
        rows = []
        for j, r in enumerate(self._base.rows):
            exc = r.exceptions
            for (i, p), b in self._levels.items():
                if i == j:
                    exc[p] = b
            rows.append(SupernaturalNumber._raw(r.default, exc.items()))
        return FgProfiniteGroup(rows)

    def __eq__(self, other):
        if not isinstance(other, LatticeElement):
            return NotImplemented
        return (self._base, self._offsets, self._levels) == (
            other._base,
            other._offsets,
            other._levels,
        )

    def __hash__(self):
        return hash((self._base, tuple(self._offsets.items()), tuple(self._levels.items())))

    def __repr__(self):
        return (
            f"LatticeElement(base={self._base!r}, free_offsets={self._offsets!r}, "
            f"torsion_levels={self._levels!r})"
        )

    def to_json(self) -> dict:
        return {
            "base": self._base.to_json(),
            "free_offsets": [[j, p, a] for (j, p), a in self._offsets.items()],
            "torsion_levels": [[j, p, b] for (j, p), b in self._levels.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> LatticeElement:
        def table(entries):
            out = {}
            for entry in entries:
                j, p, v = entry
                out[int(j), int(p)] = int(v)
            return out

        return cls(
            FgProfiniteGroup.from_json(data["base"]),
            table(data.get("free_offsets", [])),
            table(data.get("torsion_levels", [])),
        )


def _same_base(x: LatticeElement, y: LatticeElement):
    if x.base != y.base:
        raise MismatchedBase("lattice elements have different bases")


def _touched(*xs: LatticeElement) -> tuple[set, set]:
    free, tors = set(), set()
    for x in xs:
        free |= x._offsets.keys()
        tors |= x._levels.keys()
    return free, tors


def _combine(x: LatticeElement, y: LatticeElement, free_op, tors_op) -> LatticeElement:
    _same_base(x, y)
    free, tors = _touched(x, y)
    return LatticeElement(
        x.base,
        {c: free_op(x.offset(*c), y.offset(*c)) for c in free},
        {c: tors_op(x.level(*c), y.level(*c)) for c in tors},
    )


def meet(x: LatticeElement, y: LatticeElement) -> LatticeElement:
    """Intersection."""
    return _combine(x, y, max, min)


def join(x: LatticeElement, y: LatticeElement) -> LatticeElement:
    """Sum ``x + y``."""
    return _combine(x, y, min, max)


def leq(x: LatticeElement, y: LatticeElement) -> bool:
    """Containment ``x <= y``."""
    _same_base(x, y)
    free, tors = _touched(x, y)
    return all(x.offset(*c) >= y.offset(*c) for c in free) and all(
        x.level(*c) <= y.level(*c) for c in tors
    )


def index(x: LatticeElement, y: LatticeElement) -> int:
    """The index ``[y : x]`` for ``x`` contained in ``y``; always finite."""
    if not leq(x, y):
        raise NotContained("first element is not contained in the second")
    free, tors = _touched(x, y)
    n = 1
    for j, p in free:
        n *= p ** (x.offset(j, p) - y.offset(j, p))
    for j, p in tors:
        n *= p ** (y.level(j, p) - x.level(j, p))
    return n


def _row_primes(x: LatticeElement, k: int) -> tuple[dict, list]:
    val = factor_scalar(k)
    coords = [(j, p) for j in range(x.base.width) for p in val]
    return val, coords


def scale(x: LatticeElement, k: int) -> LatticeElement:
    """``kx``: offsets rise by ``v_p(k)``, levels fall by it (clamped at 0)."""
    val, coords = _row_primes(x, k)
    offsets, levels = x.free_offsets, x.torsion_levels
    for j, p in coords:
        if x.base.rows[j][p] == INF:
            offsets[j, p] = x.offset(j, p) + val[p]
        else:
            levels[j, p] = max(x.level(j, p) - val[p], 0)
    return LatticeElement(x.base, offsets, levels)


def preimage_mu(x: LatticeElement, n: int) -> LatticeElement:
    """Preimage of ``x`` under multiplication by ``n``."""
    val, coords = _row_primes(x, n)
    offsets, levels = x.free_offsets, x.torsion_levels
    for j, p in coords:
        if x.base.rows[j][p] == INF:
            offsets[j, p] = x.offset(j, p) - val[p]
        else:
            levels[j, p] = x.level(j, p) + val[p]
    return LatticeElement(x.base, offsets, levels)


def find_conductor(x: LatticeElement, y: LatticeElement) -> int:
    """Least ``k >= 1`` with ``kx`` contained in ``y``."""
    _same_base(x, y)
    free, tors = _touched(x, y)
    need: dict[int, int] = {}
    for j, p in free:
        need[p] = max(need.get(p, 0), y.offset(j, p) - x.offset(j, p))
    for j, p in tors:
        need[p] = max(need.get(p, 0), x.level(j, p) - y.level(j, p))
    k = 1
    for p, v in need.items():
        if v > 0:
            k *= p**v
    return k

