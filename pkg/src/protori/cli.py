"""Command-line front end.

Every operand is an inline literal in the text notation, ``@path`` to read one
from a file, or ``-`` for stdin.  Operands starting with ``{`` are read as the
JSON form.  Exit status: 0 on success, 1 on domain errors, 2 on parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Sequence

from . import lattice as L
from .decomposable import CdGroupDescriptor, acd_witness, cd_of_dual, dual_of_cd, quasi_isomorphic
from .dsl import ParseError, ParseErrorKind, SourceSpan, format_value, parse_cd, parse_group, parse_lattice
from .dsl import parse_protorus, parse_sn
from .errors import ProtoriError
from .lattice import LatticeElement
from .profinite import (
    FgProfiniteGroup,
    KernelDescriptor,
    NaInvariants,
    isogenous,
    kernel_descriptor,
    na_invariants,
    quotient_mod_k,
    scalar_mul,
    standardize,
    verify_exactness,
)
from .protorus import (
    Extension,
    ProtorusDescriptor,
    TildeDeltaStructure,
    decompose,
    dim,
    dim_na,
    from_profinite,
    isogenous_protori,
    projective_resolution,
    tilde_delta,
    torsion_structure,
)
from .supernatural import SupernaturalNumber, sn_type_equivalent

KINDS: dict[str, tuple[Callable, Callable]] = {
    "sn": (parse_sn, SupernaturalNumber.from_json),
    "group": (parse_group, FgProfiniteGroup.from_json),
    "protorus": (parse_protorus, ProtorusDescriptor.from_json),
    "cd": (parse_cd, CdGroupDescriptor.from_json),
    "lattice": (parse_lattice, LatticeElement.from_json),
}


def load_operand(arg: str, stdin=None) -> str:
    if arg == "-":
        text = (stdin or sys.stdin).read()
    elif arg.startswith("@"):
        with open(arg[1:], encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = arg
    return text.strip()


def parse_operand(text: str, kind: str):
    parse, from_json = KINDS[kind]
    if not text.startswith("{"):
        return parse(text)
    try:
        return from_json(json.loads(text))
    except json.JSONDecodeError as exc:
        span = SourceSpan(exc.pos, min(exc.pos + 1, len(text.encode())))
        raise ParseError(ParseErrorKind.UNEXPECTED_TOKEN, span, f"invalid JSON: {exc.msg}") from None
    except (KeyError, TypeError, AttributeError) as exc:
        span = SourceSpan(0, len(text.encode()))
        raise ParseError(ParseErrorKind.UNEXPECTED_TOKEN, span, f"malformed {kind} JSON: {exc}") from None


# text rendering of non-literal results


def _bool(b: bool) -> str:
    return "true" if b else "false"


def format_kernel(K: KernelDescriptor) -> str:
    rows = []
    for r in K.rows:
        d, other = ("free", "zero") if r.default_free else ("zero", "free")
        if r.flipped:
            d += f" ; {other} at " + ",".join(map(str, sorted(r.flipped)))
        rows.append(d)
    return "kernel[" + ", ".join(rows) + "]"


def format_tilde(T: TildeDeltaStructure) -> str:
    parts = [f"dim_na={T.dim_na}", f"default r={T.default[0]} c={T.default[1]}"]
    parts += [f"p={p} r={r} c={c}" for p, (r, c) in T.exceptions]
    return " ; ".join(parts)


def render_text(value) -> str:
    if isinstance(value, bool):
        return _bool(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, NaInvariants):
        return f"width={value.width} dim={value.dimension}"
    if isinstance(value, TildeDeltaStructure):
        return format_tilde(value)
    if isinstance(value, KernelDescriptor):
        return format_kernel(value)
    if isinstance(value, Extension):
        return (
            f"protorus: {format_value(value.protorus)}\n"
            f"subgroup: {format_value(value.subgroup)}\n"
            f"finite: {format_value(value.finite_rows)}"
        )
    if isinstance(value, dict):
        return "\n".join(f"{k}: {render_text(v)}" for k, v in value.items())
    return format_value(value)


def render_json(value):
    if isinstance(value, (bool, int)):
        return value
    if isinstance(value, Extension):
        return {
            "protorus": value.protorus.to_json(),
            "subgroup": value.subgroup.to_json(),
            "finite_rows": value.finite_rows.to_json(),
        }
    if isinstance(value, dict):
        return {k: render_json(v) for k, v in value.items()}
    return value.to_json()


# commands


def _unary(kind: str, fn: Callable):
    def run(args, read):
        return fn(read(args.operands[0], kind))

    return run, 1


def _binary(kind: str, fn: Callable):
    def run(args, read):
        a, b = (read(x, kind) for x in args.operands)
        return fn(a, b)

    return run, 2


def _scalar(kind: str, fn: Callable):
    def run(args, read):
        return fn(read(args.operands[0], kind), args.k)

    return run, 1


def _decompose(K):
    q, t, free = decompose(K)
    return {"divisible_rank": q, "torus_rank": t, "torus_free_part": free}


def _resolve(K):
    kernel, rank = projective_resolution(K)
    return {"free_rank": rank, "kernel": kernel}


COMMANDS: dict[str, tuple[Callable, int]] = {
    "normalize": _unary("group", standardize),
    "invariants": _unary("group", na_invariants),
    "quotient": _scalar("group", quotient_mod_k),
    "scale": _scalar("group", scalar_mul),
    "isogeny": _binary("group", isogenous),
    "typeq": _binary("sn", sn_type_equivalent),
    "kernel": _unary("group", kernel_descriptor),
    "verify-exact": _unary("group", verify_exactness),
    "build-protorus": _unary("group", from_profinite),
    "decompose": _unary("protorus", _decompose),
    "dim": _unary("protorus", dim),
    "dim-na": _unary("protorus", dim_na),
    "tilde-delta": _unary("protorus", tilde_delta),
    "torsion": _unary("protorus", torsion_structure),
    "resolve": _unary("protorus", _resolve),
    "dual": _unary("cd", dual_of_cd),
    "undual": _unary("protorus", cd_of_dual),
    "quasi-iso": _binary("cd", quasi_isomorphic),
    "acd-witness": _unary("protorus", acd_witness),
    "isogeny-protori": _binary("protorus", isogenous_protori),
}

LATTICE_COMMANDS: dict[str, tuple[Callable, int]] = {
    "meet": _binary("lattice", L.meet),
    "join": _binary("lattice", L.join),
    "leq": _binary("lattice", L.leq),
    "index": _binary("lattice", L.index),
    "conductor": _binary("lattice", L.find_conductor),
    "scale": _scalar("lattice", L.scale),
    "preimage": _scalar("lattice", L.preimage_mu),
}

SCALAR_COMMANDS = {"quotient", "scale"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="protori", description=__doc__.splitlines()[0])
    parser.add_argument("--output", "-o", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(subparsers, name, arity, scalar):
        p = subparsers.add_parser(name)
        if scalar:
            p.add_argument("--k", type=int, required=True)
        p.add_argument("operands", nargs=arity, metavar="OPERAND")
        p.add_argument("--output", "-o", choices=("text", "json"), default=argparse.SUPPRESS)

    for name, (_, arity) in COMMANDS.items():
        add(sub, name, arity, name in SCALAR_COMMANDS)
    lat = sub.add_parser("lattice")
    lsub = lat.add_subparsers(dest="lattice_command", required=True, metavar="OP")
    for name, (_, arity) in LATTICE_COMMANDS.items():
        add(lsub, name, arity, name in ("scale", "preimage"))
    st = sub.add_parser("selftest")
    st.add_argument("--seed", type=int, default=0)
    st.add_argument("--rounds", type=int, default=300)
    st.add_argument("--output", "-o", choices=("text", "json"), default=argparse.SUPPRESS)
    return parser


def _color(text: str, stream) -> str:
    if os.environ.get("NO_COLOR") is not None or not getattr(stream, "isatty", lambda: False)():
        return text
    return f"\x1b[31m{text}\x1b[0m"


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    as_json = args.output == "json"

    if args.command == "selftest":
        from .selftest import run_selftest

        report = run_selftest(args.seed, args.rounds)
        if as_json:
            print(json.dumps({"seed": report.seed, "checks": report.checks, "failures": report.failures}), file=stdout)
        else:
            print(f"selftest seed={report.seed} checks={report.checks} failures={len(report.failures)}", file=stdout)
            if report.failures:
                print(json.dumps(report.failures[0], indent=2), file=stdout)
        return 0 if report.ok else 1

    sources = {}

    def read(arg, kind):
        sources["current"] = text = load_operand(arg, stdin)
        return parse_operand(text, kind)

    if args.command == "lattice":
        run, _ = LATTICE_COMMANDS[args.lattice_command]
    else:
        run, _ = COMMANDS[args.command]
    try:
        result = run(args, read)
    except ParseError as exc:
        print(_color(exc.render(sources.get("current", "")), stderr), file=stderr)
        return 2
    except (ProtoriError, OSError) as exc:
        print(_color(f"error[{type(exc).__name__}]: {exc}", stderr), file=stderr)
        return 1
    if as_json:
        print(json.dumps(render_json(result), sort_keys=True), file=stdout)
    else:
        print(render_text(result), file=stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
