"""Text notation for supernatural numbers, groups, descriptors and lattice elements.

Grammar (whitespace-insensitive, LL(1))::

    sn        = ( "1" | factors ) [ ";" "rest" "=" exp ] ;
    factors   = factor { "*" factor } ;
    factor    = INT "^" exp ;
    exp       = INT | "inf" ;
    group     = "0" | "prod" "[" sn { "," sn } "]" ;
    protorus  = "protorus" "(" [ kwarg { "," kwarg } ] ")" ;   (divisible, torus, solenoids)
    cd        = "cd" "(" [ kwarg { "," kwarg } ] ")" ;         (divisible, free, types)
    lattice   = "lattice" "(" kwarg { "," kwarg } ")" ;        (base, free, torsion)
    kwarg     = NAME "=" ( INT | group | "[" [ item { "," item } ] "]" ) ;
    triple    = "(" INT "," INT "," [ "-" ] INT ")" ;

Lists under ``solenoids``/``types`` hold ``sn`` items; lists under
``free``/``torsion`` hold ``(row, prime, value)`` triples with 0-based rows.

>>> format_sn(parse_sn("3^2 * 2^inf"))
'2^inf * 3^2'
>>> format_sn(parse_sn("2^1 ; rest = 1"))
'1 ; rest = 1'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from sympy import isprime

from .decomposable import CdGroupDescriptor
from .lattice import LatticeElement
from .profinite import FgProfiniteGroup
from .protorus import ProtorusDescriptor
from .supernatural import INF, MAX_PRIME, SupernaturalNumber

__all__ = [
    "SourceSpan",
    "ParseErrorKind",
    "ParseError",
    "parse_sn",
    "parse_group",
    "parse_protorus",
    "parse_cd",
    "parse_lattice",
    "parse_any",
    "format_sn",
    "format_group",
    "format_protorus",
    "format_cd",
    "format_lattice",
    "format_value",
]


@dataclass(frozen=True)
class SourceSpan:
    """Byte offsets ``[start, end)`` into the UTF-8 encoded input."""

    start: int
    end: int


class ParseErrorKind(str, Enum):
    UNEXPECTED_TOKEN = "UnexpectedToken"
    NON_PRIME_BASE = "NonPrimeBase"
    DUPLICATE_PRIME = "DuplicatePrime"
    BAD_EXPONENT = "BadExponent"


class ParseError(Exception):
    def __init__(self, kind: ParseErrorKind, span: SourceSpan, message: str):
        super().__init__(f"{kind.value} at {span.start}..{span.end}: {message}")
        self.kind = kind
        self.span = span
        self.message = message

    def render(self, text: str) -> str:
        """Message plus the offending line with a caret underline."""
        data = text.encode()
        line_start = data.rfind(b"\n", 0, self.span.start) + 1
        line_end = data.find(b"\n", self.span.start)
        if line_end < 0:
            line_end = len(data)
        line = data[line_start:line_end].decode(errors="replace")
        pad = len(data[line_start : self.span.start].decode(errors="replace"))
        width = max(1, len(data[self.span.start : min(self.span.end, line_end)].decode(errors="replace")))
        return f"error[{self.kind.value}]: {self.message}\n  {line}\n  {' ' * pad}{'^' * width}"


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]+)|(?P<punct>[\^*;=\[\](),-]))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # "int", "name", "punct", "eof"
    text: str
    start: int
    end: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    n = len(text)
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = pos + len(text[pos:]) - len(text[pos:].lstrip())
            if stripped >= n:
                break
            raise ParseError(
                ParseErrorKind.UNEXPECTED_TOKEN,
                _span(text, stripped, stripped + 1),
                f"unexpected character {text[stripped]!r}",
            )
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind), m.end(kind)))
        pos = m.end()
    toks.append(_Tok("eof", "", n, n))
    return toks


def _span(text: str, start: int, end: int) -> SourceSpan:
    b0 = len(text[:start].encode())
    return SourceSpan(b0, b0 + len(text[start:end].encode()))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    # token helpers

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def peek(self, offset: int = 1) -> _Tok:
        return self.toks[min(self.i + offset, len(self.toks) - 1)]

    def error(self, kind: ParseErrorKind, tok: _Tok, message: str, end: int | None = None):
        return ParseError(kind, _span(self.text, tok.start, tok.end if end is None else end), message)

    def unexpected(self, expected: str) -> ParseError:
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        return self.error(ParseErrorKind.UNEXPECTED_TOKEN, t, f"expected {expected}, found {found}")

    def at(self, text: str) -> bool:
        return self.tok.kind != "eof" and self.tok.text == text and self.tok.kind != "int"

    def expect(self, text: str) -> _Tok:
        if not self.at(text):
            raise self.unexpected(repr(text))
        t = self.tok
        self.i += 1
        return t

    def expect_int(self) -> tuple[int, _Tok]:
        if self.tok.kind != "int":
            raise self.unexpected("an integer")
        t = self.tok
        self.i += 1
        return int(t.text), t

    def finish(self):
        if self.tok.kind != "eof":
            raise self.unexpected("end of input")

    # grammar

    def exponent(self):
        t = self.tok
        if self.at("inf"):
            self.i += 1
            return INF
        if self.at("-"):
            nxt = self.peek()
            end = nxt.end if nxt.kind == "int" else t.end
            raise self.error(ParseErrorKind.BAD_EXPONENT, t, "exponent must be non-negative", end)
        if t.kind != "int":
            raise self.unexpected("an exponent (integer or 'inf')")
        self.i += 1
        return int(t.text)

    def sn(self) -> SupernaturalNumber:
        t = self.tok
        exceptions: dict[int, object] = {}
        if t.kind == "int" and self.peek().text != "^":
            if t.text != "1" and int(t.text) != 1:
                raise self.unexpected("'1' or a factor 'p^e'")
            self.i += 1
        else:
            while True:
                p, pt = self.expect_int()
                if p < 2 or p > MAX_PRIME or not isprime(p):
                    raise self.error(ParseErrorKind.NON_PRIME_BASE, pt, f"{p} is not prime")
                if p in exceptions:
                    raise self.error(ParseErrorKind.DUPLICATE_PRIME, pt, f"prime {p} repeated")
                self.expect("^")
                exceptions[p] = self.exponent()
                if not self.at("*"):
                    break
                self.i += 1
        default = 0
        if self.at(";"):
            self.i += 1
            self.expect("rest")
            self.expect("=")
            default = self.exponent()
        return SupernaturalNumber(default, exceptions)

    def group(self) -> FgProfiniteGroup:
        t = self.tok
        if t.kind == "int" and int(t.text) == 0:
            self.i += 1
            return FgProfiniteGroup()
        if not self.at("prod"):
            raise self.unexpected("'0' or 'prod[...]'")
        self.i += 1
        self.expect("[")
        rows = [self.sn()]
        while self.at(","):
            self.i += 1
            rows.append(self.sn())
        self.expect("]")
        return FgProfiniteGroup(rows)

    def listing(self, item: Callable):
        self.expect("[")
        out = []
        if not self.at("]"):
            out.append(item())
            while self.at(","):
                self.i += 1
                out.append(item())
        self.expect("]")
        return out

    def triple(self):
        self.expect("(")
        j, _ = self.expect_int()
        self.expect(",")
        p, pt = self.expect_int()
        if p < 2 or not isprime(p):
            raise self.error(ParseErrorKind.NON_PRIME_BASE, pt, f"{p} is not prime")
        self.expect(",")
        sign = 1
        if self.at("-"):
            self.i += 1
            sign = -1
        v, _ = self.expect_int()
        self.expect(")")
        return (j, p), sign * v

    def kwargs(self, head: str, fields: dict[str, Callable]) -> dict:
        self.expect(head)
        self.expect("(")
        out = {}
        while not self.at(")"):
            if out:
                self.expect(",")
            name_tok = self.tok
            if name_tok.kind != "name" or name_tok.text not in fields:
                raise self.unexpected("one of " + ", ".join(fields))
            if name_tok.text in out:
                raise self.error(ParseErrorKind.UNEXPECTED_TOKEN, name_tok, f"{name_tok.text} given twice")
            self.i += 1
            self.expect("=")
            out[name_tok.text] = fields[name_tok.text]()
        self.expect(")")
        return out

    def natural(self) -> int:
        return self.expect_int()[0]

    def protorus(self) -> ProtorusDescriptor:
        kw = self.kwargs(
            "protorus",
            {"divisible": self.natural, "torus": self.natural, "solenoids": lambda: self.listing(self.sn)},
        )
        return ProtorusDescriptor(kw.get("divisible", 0), kw.get("torus", 0), tuple(kw.get("solenoids", ())))

    def cd(self) -> CdGroupDescriptor:
        kw = self.kwargs(
            "cd",
            {"divisible": self.natural, "free": self.natural, "types": lambda: self.listing(self.sn)},
        )
        return CdGroupDescriptor(kw.get("divisible", 0), kw.get("free", 0), tuple(kw.get("types", ())))

    def lattice(self) -> LatticeElement:
        start = self.tok
        kw = self.kwargs(
            "lattice",
            {
                "base": self.group,
                "free": lambda: dict(self.listing(self.triple)),
                "torsion": lambda: dict(self.listing(self.triple)),
            },
        )
        if "base" not in kw:
            raise self.error(ParseErrorKind.UNEXPECTED_TOKEN, start, "lattice(...) needs base=")
        return LatticeElement(kw["base"], kw.get("free"), kw.get("torsion"))


def _parse(text: str, rule: str):
    p = _Parser(text)
    value = getattr(p, rule)()
    p.finish()
    return value


def parse_sn(text: str) -> SupernaturalNumber:
    return _parse(text, "sn")


def parse_group(text: str) -> FgProfiniteGroup:
    return _parse(text, "group")


def parse_protorus(text: str) -> ProtorusDescriptor:
    return _parse(text, "protorus")


def parse_cd(text: str) -> CdGroupDescriptor:
    return _parse(text, "cd")


def parse_lattice(text: str) -> LatticeElement:
    return _parse(text, "lattice")


def parse_any(text: str):
    """Parse whichever literal kind ``text`` starts with."""
    p = _Parser(text)
    t = p.tok
    if t.kind == "name" and t.text in ("prod", "protorus", "cd", "lattice"):
        rule = {"prod": "group"}.get(t.text, t.text)
    elif t.kind == "int" and p.peek().kind == "eof" and int(t.text) == 0:
        rule = "group"
    else:
        rule = "sn"
    value = getattr(p, rule)()
    p.finish()
    return value


# formatting


def _exp(e) -> str:
    return "inf" if e == INF else str(e)


def format_sn(n: SupernaturalNumber) -> str:
    body = " * ".join(f"{p}^{_exp(e)}" for p, e in n.exceptions.items()) or "1"
    if n.default != 0:
        body += f" ; rest = {_exp(n.default)}"
    return body


def format_group(D: FgProfiniteGroup) -> str:
    if not D.rows:
        return "0"
    return "prod[" + ", ".join(format_sn(r) for r in D.rows) + "]"


def _sn_list(chars) -> str:
    return "[" + ", ".join(format_sn(c) for c in chars) + "]"


def format_protorus(K: ProtorusDescriptor) -> str:
    return f"protorus(divisible={K.divisible_rank}, torus={K.torus_rank}, solenoids={_sn_list(K.solenoids)})"


def format_cd(A: CdGroupDescriptor) -> str:
    return f"cd(divisible={A.divisible_rank}, free={A.free_rank}, types={_sn_list(A.types)})"


def format_lattice(x: LatticeElement) -> str:
    def triples(table):
        return "[" + ", ".join(f"({j}, {p}, {v})" for (j, p), v in table.items()) + "]"

    return (
        f"lattice(base={format_group(x.base)}, free={triples(x.free_offsets)}, "
        f"torsion={triples(x.torsion_levels)})"
    )


def format_value(value) -> str:
    """Text form of any value the parsers produce."""
    formatters = [
        (SupernaturalNumber, format_sn),
        (FgProfiniteGroup, format_group),
        (ProtorusDescriptor, format_protorus),
        (CdGroupDescriptor, format_cd),
        (LatticeElement, format_lattice),
    ]
    for cls, fmt in formatters:
        if isinstance(value, cls):
            return fmt(value)
    raise TypeError(f"no text form for {type(value).__name__}")
