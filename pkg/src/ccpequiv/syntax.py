"""Abstract syntax of finite ccp processes and a parser for it.

Grammar (``+`` binds loosest, ``||`` tighter, the body of an ask is atomic)::

    term    := sum
    sum     := par ("+" par)*
    par     := atom ("||" atom)*
    atom    := "stop" | "tell" "(" cexpr ")" | "ask" "(" cexpr ")" "->" atom
             | NAME | "(" term ")"
    cexpr   := "true" | "false" | CNAME ("&" CNAME)*
    config  := "<" term "," cexpr ">"

Named processes are non-recursive macros expanded while parsing.
"""
from __future__ import annotations

import re
from collections.abc import Callable, Mapping
from dataclasses import dataclass
from typing import Union

from .errors import LoadError, ParseError
from .lattice import ConstraintId, ConstraintSystem


@dataclass(frozen=True)
class Stop:
    pass


@dataclass(frozen=True)
class Tell:
    c: ConstraintId


@dataclass(frozen=True)
class Ask:
    c: ConstraintId
    body: Process


@dataclass(frozen=True)
class Par:
    left: Process
    right: Process


@dataclass(frozen=True)
class Sum:
    left: Process
    right: Process


Process = Union[Stop, Tell, Ask, Par, Sum]

STOP = Stop()


@dataclass(frozen=True)
class Configuration:
    process: Process
    store: ConstraintId


def size(p: Process) -> int:
    """Number of AST nodes."""
    if isinstance(p, (Stop, Tell)):
        return 1
    if isinstance(p, Ask):
        return 1 + size(p.body)
    return 1 + size(p.left) + size(p.right)


# ---------------------------------------------------------------------------
# pretty printing


def show(p: Process, cs: ConstraintSystem) -> str:
    if isinstance(p, Stop):
        return "stop"
    if isinstance(p, Tell):
        return f"tell({cs.name(p.c)})"
    if isinstance(p, Ask):
        return f"ask({cs.name(p.c)}) -> {_atom(p.body, cs)}"
    if isinstance(p, Par):
        left = show(p.left, cs) if not isinstance(p.left, Sum) else f"({show(p.left, cs)})"
        return f"{left} || {_atom(p.right, cs)}"
    if isinstance(p, Sum):
        right = show(p.right, cs) if not isinstance(p.right, Sum) else f"({show(p.right, cs)})"
        return f"{show(p.left, cs)} + {right}"
    raise TypeError(f"not a process: {p!r}")


def _atom(p: Process, cs: ConstraintSystem) -> str:
    if isinstance(p, (Par, Sum)):
        return f"({show(p, cs)})"
    return show(p, cs)


def show_config(g: Configuration, cs: ConstraintSystem, brackets: str = "<>") -> str:
    return f"{brackets[0]}{show(g.process, cs)}, {cs.name(g.store)}{brackets[1]}"


# ---------------------------------------------------------------------------
# lexing and parsing

_TOKEN = re.compile(
    r"""\s*(?:
        (?P<arrow>->)
      | (?P<bar>\|\|)
      | (?P<pred>[A-Za-z_][A-Za-z0-9_]*\s*(?:<=|>=|!=|<|>|=)\s*-?\d+)
      | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
      | (?P<sym>[&+(),<>])
    )""",
    re.VERBOSE,
)
KEYWORDS = frozenset({"stop", "tell", "ask", "true", "false"})
NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens, pos = [], 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("unexpected character", text, pos)
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "pred":
            value = "".join(value.split())
        tokens.append((kind, value, m.start(kind)))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


Resolver = Callable[[str, int], Process]


class _Parser:
    def __init__(self, text: str, cs: ConstraintSystem, resolve: Resolver):
        self.text = text
        self.cs = cs
        self.resolve = resolve
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.text, self.peek()[2])

    def take(self) -> tuple[str, str, int]:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        kind, v, _ = self.peek()
        if v != value or kind == "eof":
            raise self.error(f"expected {value!r}")
        self.i += 1

    def at(self, value: str) -> bool:
        kind, v, _ = self.peek()
        return kind != "eof" and v == value

    def done(self) -> None:
        if self.peek()[0] != "eof":
            raise self.error("trailing input")

    def term(self) -> Process:
        p = self.par()
        while self.at("+"):
            self.take()
            p = Sum(p, self.par())
        return p

    def par(self) -> Process:
        p = self.atom()
        while self.at("||"):
            self.take()
            p = Par(p, self.atom())
        return p

    def atom(self) -> Process:
        kind, v, pos = self.peek()
        if kind == "name" and v == "stop":
            self.take()
            return STOP
        if kind == "name" and v == "tell":
            self.take()
            self.expect("(")
            c = self.cexpr()
            self.expect(")")
            return Tell(c)
        if kind == "name" and v == "ask":
            self.take()
            self.expect("(")
            c = self.cexpr()
            self.expect(")")
            self.expect("->")
            return Ask(c, self.atom())
        if kind == "name" and v not in KEYWORDS:
            self.take()
            return self.resolve(v, pos)
        if v == "(" and kind == "sym":
            self.take()
            p = self.term()
            self.expect(")")
            return p
        raise self.error("expected a process")

    def cexpr(self) -> ConstraintId:
        parts = [self.cname()]
        while self.at("&"):
            self.take()
            parts.append(self.cname())
        return self.cs.join(parts)

    def cname(self) -> ConstraintId:
        kind, v, pos = self.peek()
        if kind not in ("name", "pred"):
            raise self.error("expected a constraint")
        self.take()
        try:
            return self.cs.lookup(v)
        except LoadError:
            raise ParseError(f"unknown constraint {v!r}", self.text, pos) from None

    def config(self) -> Configuration:
        if not self.at("<"):
            p = self.term()
            return Configuration(p, self.cs.true)
        self.take()
        p = self.term()
        store = self.cs.true
        if self.at(","):
            self.take()
            store = self.cexpr()
        self.expect(">")
        return Configuration(p, store)


def _env_resolver(env: Mapping[str, Process], text: str) -> Resolver:
    def resolve(name: str, pos: int) -> Process:
        try:
            return env[name]
        except KeyError:
            raise ParseError(f"undefined process name {name!r}", text, pos) from None
    return resolve


def parse_term(text: str, env: Mapping[str, Process], cs: ConstraintSystem) -> Process:
    p = _Parser(text, cs, _env_resolver(env, text))
    out = p.term()
    p.done()
    return out


def parse_config(text: str, env: Mapping[str, Process], cs: ConstraintSystem) -> Configuration:
    """Parse ``<TERM, c>``; a missing store (``<TERM>`` or bare ``TERM``) means ``true``."""
    p = _Parser(text, cs, _env_resolver(env, text))
    out = p.config()
    p.done()
    return out


def expand_definitions(raw: Mapping[str, str], cs: ConstraintSystem) -> dict[str, Process]:
    """Parse a table of named process bodies, expanding references acyclically."""
    done: dict[str, Process] = {}
    active: list[str] = []

    for name in raw:
        if not NAME_RE.fullmatch(name) or name in KEYWORDS:
            raise ParseError(f"bad process name {name!r}")

    def resolve(name: str, pos: int | None = None, text: str = "") -> Process:
        if name in done:
            return done[name]
        if name in active:
            cycle = " -> ".join(active[active.index(name):] + [name])
            raise ParseError(f"cyclic definition {cycle}")
        if name not in raw:
            raise ParseError(f"undefined process name {name!r}", text, pos)
        active.append(name)
        body = raw[name]
        parser = _Parser(body, cs, lambda n, at: resolve(n, at, body))
        p = parser.term()
        parser.done()
        active.pop()
        done[name] = p
        return p

    for name in raw:
        resolve(name)
    return done
