"""Randomized self-check: truncation-oracle sweep plus algebraic law checks.

Used by the ``selftest`` CLI command.  Each check returns ``None`` on success
or a counterexample dict.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import lattice as L
from .decomposable import cd_of_dual, dual_of_cd, quasi_isomorphic
from .dsl import format_group, format_value
from .generators import (
    SMALL_PRIMES,
    perturb_group,
    random_base,
    random_cd,
    random_group,
    random_lattice_element,
    random_protorus,
)
from .profinite import FgProfiniteGroup, isogenous, na_invariants, quotient_mod_k, standardize, verify_exactness
from .protorus import dim_na, isogenous_protori, tilde_delta
from .truncation import fab_iso, fab_quotient_mod_k, truncate

CAP = 8


def random_k(rng: random.Random) -> int:
    k = 1
    for p in SMALL_PRIMES:
        k *= p ** rng.randint(0, 4) if rng.random() < 0.4 else 1
    return k


def check_quotient(D, k):
    symbolic = truncate(quotient_mod_k(D, k), SMALL_PRIMES, CAP)
    oracle = fab_quotient_mod_k(truncate(D, SMALL_PRIMES, CAP), k)
    if not fab_iso(symbolic, oracle):
        return {"group": format_group(D), "k": k, "symbolic": str(symbolic), "oracle": str(oracle)}
    return None


def check_standardize(D):
    S = standardize(D)
    if standardize(S) != S or not S.is_normalized:
        return {"group": format_group(D), "standardized": format_group(S)}
    if na_invariants(FgProfiniteGroup(reversed(D.rows))) != na_invariants(D):
        return {"group": format_group(D), "law": "row permutation changes invariants"}
    return None


def check_isogeny(rng, D):
    E = perturb_group(rng, D)
    F = perturb_group(rng, E)
    ok = (
        isogenous(D, D)
        and isogenous(D, E) == isogenous(E, D)
        and isogenous(D, E)
        and isogenous(E, F)
        and isogenous(D, F)
        and na_invariants(D).dimension == na_invariants(E).dimension
    )
    if not ok:
        return {"D": format_group(D), "E": format_group(E), "F": format_group(F)}
    return None


def check_lattice(rng):
    base = random_base(rng)
    x, y, z = (random_lattice_element(rng, base) for _ in range(3))
    laws = {
        "meet commutative": L.meet(x, y) == L.meet(y, x),
        "join commutative": L.join(x, y) == L.join(y, x),
        "meet associative": L.meet(L.meet(x, y), z) == L.meet(x, L.meet(y, z)),
        "join associative": L.join(L.join(x, y), z) == L.join(x, L.join(y, z)),
        "absorption": L.join(x, L.meet(x, y)) == x and L.meet(x, L.join(x, y)) == x,
        "scale shrinks": L.leq(L.scale(x, 6), x),
        "conductor": L.leq(L.scale(x, L.find_conductor(x, y)), y),
    }
    bad = [name for name, ok in laws.items() if not ok]
    if bad:
        return {"laws": bad, "x": format_value(x), "y": format_value(y), "z": format_value(z)}
    return None


def check_protorus(rng):
    K = random_protorus(rng, torus_free=True)
    T = tilde_delta(K)
    pairs = [T.default] + [rc for _, rc in T.exceptions]
    if any(r + c != dim_na(K) for r, c in pairs):
        return {"protorus": format_value(K)}
    return None


def check_duality(rng):
    A, B = random_cd(rng), random_cd(rng)
    K = dual_of_cd(A)
    if cd_of_dual(K) != A or dual_of_cd(cd_of_dual(K)) != K:
        return {"A": format_value(A), "law": "round trip"}
    if quasi_isomorphic(A, B) != isogenous_protori(dual_of_cd(A), dual_of_cd(B)):
        return {"A": format_value(A), "B": format_value(B), "law": "duality equivalence"}
    return None


@dataclass
class Report:
    seed: int
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def run_selftest(seed: int = 0, rounds: int = 500) -> Report:
    rng = random.Random(seed)
    report = Report(seed)

    def record(name, result):
        report.checks += 1
        if result is not None:
            report.failures.append({"check": name, **result})

    for _ in range(rounds):
        D = random_group(rng)
        record("quotient oracle", check_quotient(D, random_k(rng)))
        record("standardize", check_standardize(D))
        record("exactness", None if verify_exactness(D) else {"group": format_group(D)})
        record("isogeny", check_isogeny(rng, D))
        record("lattice", check_lattice(rng))
        record("tilde delta", check_protorus(rng))
        record("duality", check_duality(rng))
    return report
