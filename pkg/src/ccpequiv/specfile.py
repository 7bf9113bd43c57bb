"""Loader for ``.ccp`` spec files.

A spec file is line oriented, with ``#`` comments and bracketed sections::

    [lattice]
    kind = bounds            # atoms | bounds | table
    var x = 0..9             # bounds: variable ranges (inclusive)
    base x<7                 # bounds: base predicates
    atoms = alpha, beta      # atoms: atom names
    elements = a, b, top     # table: element names (true/false implied)
    order a <= top           # table: generating order pairs
    lub a, b = top           # table: optional, checked against the order

    [define P]
    ask(x<7) -> tell(true)

    [config start]
    <P + Q, true>
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import LoadError, ParseError
from .lattice import ConstraintSystem, atoms_lattice, bounds_lattice, table_lattice
from .syntax import Configuration, Process, expand_definitions, parse_config

_HEADER = re.compile(r"\[\s*(lattice|define|config)(?:\s+([^\]\s]+))?\s*\]")
_RANGE = re.compile(r"(-?\d+)\s*\.\.\s*(-?\d+)")


@dataclass
class Spec:
    cs: ConstraintSystem
    definitions: dict[str, Process] = field(default_factory=dict)
    configs: dict[str, Configuration] = field(default_factory=dict)
    source: str = "<string>"

    def config(self, text: str) -> Configuration:
        """A named configuration, or else a configuration literal."""
        if text.strip() in self.configs:
            return self.configs[text.strip()]
        return parse_config(text, self.definitions, self.cs)


def load_spec(path: str | Path) -> Spec:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LoadError(f"cannot read {path}: {exc}") from None
    return parse_spec(text, source=str(path))


def parse_spec(text: str, source: str = "<string>") -> Spec:
    sections: list[tuple[str, str | None, int, list[tuple[int, str]]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _HEADER.fullmatch(line)
        if m:
            kind, name = m.group(1), m.group(2)
            if kind != "lattice" and not name:
                raise LoadError(f"{source}:{lineno}: [{kind}] needs a name")
            sections.append((kind, name, lineno, []))
        elif line.startswith("["):
            raise LoadError(f"{source}:{lineno}: unknown section header {line!r}")
        elif not sections:
            raise LoadError(f"{source}:{lineno}: content before the first section")
        else:
            sections[-1][3].append((lineno, line))

    lattices = [s for s in sections if s[0] == "lattice"]
    if len(lattices) != 1:
        raise LoadError(f"{source}: expected exactly one [lattice] section, found {len(lattices)}")
    cs = _load_lattice(lattices[0][3], source)

    raw_defs: dict[str, str] = {}
    raw_configs: dict[str, tuple[int, str]] = {}
    for kind, name, lineno, body in sections:
        if kind == "lattice":
            continue
        target = raw_defs if kind == "define" else raw_configs
        if name in target:
            raise LoadError(f"{source}:{lineno}: duplicate {kind} {name!r}")
        joined = " ".join(line for _, line in body)
        if not joined:
            raise LoadError(f"{source}:{lineno}: empty [{kind} {name}] section")
        if kind == "define":
            raw_defs[name] = joined
        else:
            raw_configs[name] = (lineno, joined)

    try:
        definitions = expand_definitions(raw_defs, cs)
    except ParseError as exc:
        raise LoadError(f"{source}: {exc}") from None
    spec = Spec(cs, definitions, {}, source)
    for name, (lineno, literal) in raw_configs.items():
        try:
            spec.configs[name] = parse_config(literal, definitions, cs)
        except ParseError as exc:
            raise LoadError(f"{source}:{lineno}: {exc}") from None
    return spec


def _split_list(value: str) -> list[str]:
    return [v.strip() for v in value.split(",") if v.strip()]


def _load_lattice(lines: list[tuple[int, str]], source: str) -> ConstraintSystem:
    kind = None
    atoms: list[str] = []
    variables: list[tuple[str, range]] = []
    base: list[str] = []
    elements: list[str] = []
    order: list[tuple[str, str]] = []
    lubs: list[tuple[str, str, str]] = []
    for lineno, line in lines:
        where = f"{source}:{lineno}"
        word, _, rest = line.partition(" ")
        word, rest = word.strip(), rest.strip()
        if "=" in word and word != "=":
            word, _, tail = line.partition("=")
            word, rest = word.strip(), "= " + tail.strip()
        if word == "kind":
            kind = rest.lstrip("=").strip()
        elif word == "atoms":
            atoms += _split_list(rest.lstrip("="))
        elif word == "var":
            name, eq, rng = rest.partition("=")
            m = _RANGE.fullmatch(rng.strip())
            if not eq or not m:
                raise LoadError(f"{where}: expected 'var NAME = LO..HI'")
            variables.append((name.strip(), range(int(m.group(1)), int(m.group(2)) + 1)))
        elif word == "base":
            base += _split_list(rest.lstrip("= "))
        elif word == "elements":
            elements += _split_list(rest.lstrip("="))
        elif word == "order":
            if "<=" not in rest:
                raise LoadError(f"{where}: expected 'order A <= B'")
            a, b = rest.split("<=", 1)
            order.append((a.strip(), b.strip()))
        elif word == "lub":
            lhs, eq, c = rest.partition("=")
            pair = _split_list(lhs)
            if not eq or len(pair) != 2:
                raise LoadError(f"{where}: expected 'lub A, B = C'")
            lubs.append((pair[0], pair[1], c.strip()))
        else:
            raise LoadError(f"{where}: unknown lattice directive {word!r}")
    try:
        if kind == "atoms":
            return atoms_lattice(atoms)
        if kind == "bounds":
            return bounds_lattice(variables, base)
        if kind == "table":
            return table_lattice(elements, order, lubs)
    except LoadError as exc:
        raise LoadError(f"{source}: {exc}") from None
    raise LoadError(f"{source}: lattice kind must be atoms, bounds or table (got {kind!r})")
