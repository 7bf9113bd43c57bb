"""Finite constraint systems.

A constraint system here is an explicitly enumerated finite lattice.  Elements
are small integer ids; the order ``c <= d`` means that ``d`` entails ``c`` (it
carries at least as much information), ``lub`` joins information, ``true`` is
the bottom and ``false`` the top.  Three constructors are provided: free
lattices over a set of atoms, lattices of variable-bound assignments, and
explicit tables.
"""
from __future__ import annotations

import itertools
import operator
import re
from collections.abc import Iterable, Mapping, Sequence

from .errors import LoadError

ConstraintId = int


class ConstraintSystem:
    """An immutable finite lattice of constraints.

    ``leq`` is given as an n x n boolean matrix and ``lub`` as an n x n table
    of element ids.  Both are checked against each other on construction.
    """

    def __init__(
        self,
        names: Sequence[str],
        leq: Sequence[Sequence[bool]],
        lub: Sequence[Sequence[int]],
        *,
        aliases: Mapping[str, int] | None = None,
        kind: str = "table",
    ):
        n = len(names)
        if n == 0:
            raise LoadError("constraint system must have at least one element")
        if len(set(names)) != n:
            raise LoadError("duplicate element names in constraint system")
        if len(leq) != n or any(len(row) != n for row in leq):
            raise LoadError("leq matrix has the wrong shape")
        if len(lub) != n or any(len(row) != n for row in lub):
            raise LoadError("lub table has the wrong shape")
        self.kind = kind
        self.names: tuple[str, ...] = tuple(names)
        self._lub = tuple(tuple(int(x) for x in row) for row in lub)
        for row in self._lub:
            for x in row:
                if not 0 <= x < n:
                    raise LoadError(f"lub entry {x} is not an element id")
        # up[c]: bitmask of every d with c <= d; down[d]: every c with c <= d
        self._up = [0] * n
        self._down = [0] * n
        for c in range(n):
            for d in range(n):
                if leq[c][d]:
                    self._up[c] |= 1 << d
                    self._down[d] |= 1 << c

        bottoms = [c for c in range(n) if self._up[c] == (1 << n) - 1]
        tops = [c for c in range(n) if self._down[c] == (1 << n) - 1]
        if len(bottoms) != 1 or len(tops) != 1:
            raise LoadError("constraint system needs a unique least and greatest element")
        self.true: ConstraintId = bottoms[0]
        self.false: ConstraintId = tops[0]

        problems = self.check_laws(full=False)
        if problems:
            raise LoadError("invalid constraint system: " + "; ".join(problems[:5]))

        self._aliases: dict[str, int] = {name: i for i, name in enumerate(self.names)}
        self._aliases.setdefault("true", self.true)
        self._aliases.setdefault("false", self.false)
        if self._aliases["true"] != self.true or self._aliases["false"] != self.false:
            raise LoadError("the names 'true' and 'false' must denote bottom and top")
        for alias, c in (aliases or {}).items():
            key = _normalize(alias)
            if key in self._aliases and self._aliases[key] != c:
                raise LoadError(f"name {alias!r} is ambiguous")
            self._aliases[key] = c

        self._enablers: dict[tuple[int, int], tuple[int, ...]] = {}
        self._solutions: dict[tuple[int, int], tuple[int, ...]] = {}

    # -- basic structure ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.names)

    def __repr__(self) -> str:
        return f"ConstraintSystem(kind={self.kind!r}, size={len(self)})"

    @property
    def elements(self) -> range:
        return range(len(self.names))

    def leq(self, c: ConstraintId, d: ConstraintId) -> bool:
        """True iff ``d`` entails ``c``."""
        return bool((self._up[c] >> d) & 1)

    def lub(self, c: ConstraintId, d: ConstraintId) -> ConstraintId:
        return self._lub[c][d]

    def join(self, cs: Iterable[ConstraintId]) -> ConstraintId:
        out = self.true
        for c in cs:
            out = self._lub[out][c]
        return out

    def downset(self, c: ConstraintId) -> frozenset[ConstraintId]:
        return frozenset(_bits(self._down[c]))

    def upset(self, c: ConstraintId) -> frozenset[ConstraintId]:
        return frozenset(_bits(self._up[c]))

    def name(self, c: ConstraintId) -> str:
        return self.names[c]

    def lookup(self, name: str) -> ConstraintId:
        try:
            return self._aliases[_normalize(name)]
        except KeyError:
            raise LoadError(f"unknown constraint {name!r}") from None

    def parse(self, text: str) -> ConstraintId:
        """Resolve ``"a & b & ..."`` to the lub of the named constraints."""
        parts = [p for p in text.split("&")]
        if any(not p.strip() for p in parts):
            raise LoadError(f"malformed constraint expression {text!r}")
        return self.join(self.lookup(p) for p in parts)

    # -- derived operations ------------------------------------------------

    def minimal_enablers(self, c: ConstraintId, d: ConstraintId) -> tuple[ConstraintId, ...]:
        """The minimal ``a`` such that ``c <= d lub a``, in id order."""
        key = (c, d)
        cached = self._enablers.get(key)
        if cached is None:
            row = self._lub[d]
            cand = 0
            for a in self.elements:
                if self.leq(c, row[a]):
                    cand |= 1 << a
            cached = tuple(a for a in _bits(cand) if self._down[a] & cand == 1 << a)
            self._enablers[key] = cached
        return cached

    def lub_solutions(self, a: ConstraintId, b: ConstraintId) -> tuple[ConstraintId, ...]:
        """Every ``e`` with ``a lub e == b`` (empty unless ``a <= b``)."""
        key = (a, b)
        cached = self._solutions.get(key)
        if cached is None:
            row = self._lub[a]
            cached = tuple(e for e in self.elements if row[e] == b)
            self._solutions[key] = cached
        return cached

    # -- validation ----------------------------------------------------------

    def check_laws(self, full: bool = True) -> list[str]:
        """Exhaustively check the partial-order and lub laws.

        With ``full`` the algebraic laws (commutativity, associativity,
        idempotence, absorption) are also checked; they follow from the order
        laws but are cheap enough to test directly on small lattices.
        """
        n = len(self.names)
        up, down, lub = self._up, self._down, self._lub
        problems = []
        for c in range(n):
            if not (up[c] >> c) & 1:
                problems.append(f"leq not reflexive at {self.names[c]}")
            for d in _bits(up[c]):
                if d != c and (up[d] >> c) & 1:
                    problems.append(f"leq not antisymmetric at {self.names[c]}, {self.names[d]}")
                if up[d] & ~up[c]:
                    problems.append(f"leq not transitive through {self.names[c]} <= {self.names[d]}")
        for c in range(n):
            for d in range(n):
                j = lub[c][d]
                bounds = up[c] & up[d]
                if not (bounds >> j) & 1:
                    problems.append(f"lub({self.names[c]}, {self.names[d]}) is not an upper bound")
                elif bounds & ~up[j]:
                    problems.append(f"lub({self.names[c]}, {self.names[d]}) is not least")
        if problems or not full:
            return problems
        if up[self.true] != (1 << n) - 1:
            problems.append("true is not the least element")
        if down[self.false] != (1 << n) - 1:
            problems.append("false is not the greatest element")
        for a in range(n):
            if lub[a][a] != a:
                problems.append(f"lub not idempotent at {self.names[a]}")
            if lub[self.true][a] != a:
                problems.append(f"true is not neutral for {self.names[a]}")
            for b in range(n):
                if lub[a][b] != lub[b][a]:
                    problems.append(f"lub not commutative at {self.names[a]}, {self.names[b]}")
                if self.leq(a, b) != (lub[a][b] == b):
                    problems.append(f"leq/lub disagree at {self.names[a]}, {self.names[b]}")
                ab = lub[a][b]
                for c in range(n):
                    if lub[ab][c] != lub[a][lub[b][c]]:
                        problems.append("lub not associative at " + ", ".join(
                            self.names[x] for x in (a, b, c)))
        return problems


# ---------------------------------------------------------------------------
# constructors


def atoms_lattice(atoms: Sequence[str]) -> ConstraintSystem:
    """All subsets of ``atoms`` ordered by inclusion, plus a separate top ``false``."""
    atoms = [a.strip() for a in atoms]
    if not atoms:
        raise LoadError("atoms lattice needs at least one atom")
    if len(set(atoms)) != len(atoms):
        raise LoadError("duplicate atom name")
    for a in atoms:
        if not _IDENT.fullmatch(a) or a in ("true", "false"):
            raise LoadError(f"bad atom name {a!r}")
    k = len(atoms)
    subsets = sorted(range(1 << k), key=lambda m: (bin(m).count("1"), list(_bits(m))))
    names = [" & ".join(atoms[i] for i in _bits(m)) or "true" for m in subsets]
    names.append("false")
    top = len(subsets)
    index = {m: i for i, m in enumerate(subsets)}
    n = top + 1

    leq = [[False] * n for _ in range(n)]
    lub = [[top] * n for _ in range(n)]
    for i, m in enumerate(subsets):
        leq[i][top] = True
        for j, m2 in enumerate(subsets):
            leq[i][j] = m & ~m2 == 0
            lub[i][j] = index[m | m2]
    leq[top][top] = True
    return ConstraintSystem(names, leq, lub, kind="atoms")


_PRED = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*(<=|>=|!=|<|>|=)\s*(-?\d+)\s*")
_OPS = {
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
    "=": operator.eq,
    "!=": operator.ne,
}


def parse_predicate(text: str) -> tuple[str, str, int]:
    m = _PRED.fullmatch(text)
    if not m:
        raise LoadError(f"bad base predicate {text!r}; expected e.g. 'x<7'")
    return m.group(1), m.group(2), int(m.group(3))


def bounds_lattice(
    variables: Mapping[str, Iterable[int]] | Sequence[tuple[str, Iterable[int]]],
    base: Sequence[str],
) -> ConstraintSystem:
    """Lattice of assignment sets generated by comparison predicates.

    Each base predicate such as ``x<7`` denotes the set of assignments (over
    the declared finite ranges) that satisfy it.  The universe is closed under
    intersection; ``c <= d`` iff ``c`` is a superset of ``d``.
    """
    items = list(variables.items()) if isinstance(variables, Mapping) else list(variables)
    var_names = [v for v, _ in items]
    if len(set(var_names)) != len(var_names):
        raise LoadError("duplicate variable")
    ranges = []
    for v, r in items:
        r = list(r)
        if not r:
            raise LoadError(f"empty range for variable {v!r}")
        ranges.append(r)
    if not base:
        raise LoadError("bounds lattice needs at least one base predicate")

    assignments = list(itertools.product(*ranges))
    full = (1 << len(assignments)) - 1
    base_names, base_ext = [], []
    for text in base:
        var, op, k = parse_predicate(text)
        if var not in var_names:
            raise LoadError(f"predicate {text!r} mentions undeclared variable {var!r}")
        pos, test = var_names.index(var), _OPS[op]
        ext = 0
        for i, a in enumerate(assignments):
            if test(a[pos], k):
                ext |= 1 << i
        name = f"{var}{op}{k}"
        if name in base_names:
            raise LoadError(f"duplicate base predicate {name!r}")
        base_names.append(name)
        base_ext.append(ext)

    universe = {full, 0} | set(base_ext)
    frontier = set(universe)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(universe):
                x = a & b
                if x not in universe:
                    new.add(x)
        universe |= new
        frontier = new

    def conjuncts(ext: int) -> tuple[int, ...]:
        above = [i for i, e in enumerate(base_ext) if ext & ~e == 0]
        keep = []
        for i in above:
            e = base_ext[i]
            if any(base_ext[j] != e and e & base_ext[j] == base_ext[j] for j in above):
                continue
            if any(base_ext[j] == e for j in keep):
                continue
            keep.append(i)
        return tuple(keep)

    middle = sorted((x for x in universe if x not in (full, 0)),
                    key=lambda x: (len(conjuncts(x)), conjuncts(x)))
    order = [full, *middle, 0]
    names = ["true"] + [" & ".join(base_names[i] for i in conjuncts(x)) for x in middle] + ["false"]
    index = {x: i for i, x in enumerate(order)}
    n = len(order)
    # c <= d iff ext(c) is a superset of ext(d)
    leq = [[order[j] & ~order[i] == 0 for j in range(n)] for i in range(n)]
    lub = [[index[order[i] & order[j]] for j in range(n)] for i in range(n)]
    aliases = {name: index[e] for name, e in zip(base_names, base_ext)}
    return ConstraintSystem(names, leq, lub, aliases=aliases, kind="bounds")


def table_lattice(
    elements: Sequence[str],
    order: Iterable[tuple[str, str]],
    lubs: Iterable[tuple[str, str, str]] = (),
) -> ConstraintSystem:
    """Lattice from an explicit element list and generating order pairs.

    ``order`` pairs ``(c, d)`` mean ``c <= d``; reflexive/transitive closure is
    taken and ``true``/``false`` are placed at bottom/top.  Every declared lub
    entry must agree with the least upper bound computed from the order.
    """
    elements = [e.strip() for e in elements]
    if len(set(elements)) != len(elements):
        raise LoadError("duplicate element in table lattice")
    for e in elements:
        if not _IDENT.fullmatch(e):
            raise LoadError(f"bad element name {e!r}")
    if "true" not in elements:
        elements.insert(0, "true")
    if "false" not in elements:
        elements.append("false")
    idx = {e: i for i, e in enumerate(elements)}
    n = len(elements)

    def get(name):
        try:
            return idx[name.strip()]
        except KeyError:
            raise LoadError(f"unknown element {name!r} in table lattice") from None

    up = [1 << i for i in range(n)]
    for i in range(n):
        up[idx["true"]] |= 1 << i
        up[i] |= 1 << idx["false"]
    for c, d in order:
        up[get(c)] |= 1 << get(d)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = up[i]
            for j in _bits(up[i]):
                acc |= up[j]
            if acc != up[i]:
                up[i] = acc
                changed = True
    for i in range(n):
        for j in _bits(up[i]):
            if j != i and (up[j] >> i) & 1:
                raise LoadError(f"order is cyclic between {elements[i]!r} and {elements[j]!r}")

    lub = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            bounds = up[i] & up[j]
            least = [k for k in _bits(bounds) if bounds & ~up[k] == 0]
            if len(least) != 1:
                raise LoadError(f"{elements[i]!r} and {elements[j]!r} have no least upper bound")
            lub[i][j] = least[0]
    for a, b, c in lubs:
        ia, ib, ic = get(a), get(b), get(c)
        if lub[ia][ib] != ic:
            raise LoadError(
                f"declared lub({a}, {b}) = {c} but the order gives {elements[lub[ia][ib]]}")
    leq = [[bool((up[i] >> j) & 1) for j in range(n)] for i in range(n)]
    return ConstraintSystem(elements, leq, lub, kind="table")


# ---------------------------------------------------------------------------

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _normalize(name: str) -> str:
    return " & ".join("".join(part.split()) for part in name.split("&"))


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1
