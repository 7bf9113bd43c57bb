"""Brute-force saturated barbed bisimilarity, straight from the definition.

The pair universe is every pair reachable from ``(g1, g2)`` by joining the
same constraint into both stores or by letting both sides move.  All pairs
with matching (weak) barbs start related and pairs are deleted until the
relation is closed under store extension and under move matching in both
directions.  Only the unlabeled reduction relation is used, so this shares
nothing with the labeled semantics, saturation or refinement code.
"""
from __future__ import annotations

from collections import defaultdict, deque
from typing import NamedTuple

from .errors import StateCapExceeded
from .lattice import ConstraintSystem
from .semantics import DEFAULT_CAP, reduce, reduction_closure
from .syntax import Configuration


class OracleResult(NamedTuple):
    equivalent: bool
    pairs: int
    configurations: int


def run_oracle(g1: Configuration, g2: Configuration, cs: ConstraintSystem,
               weak: bool = False, cap: int = DEFAULT_CAP) -> OracleResult:
    moves_cache: dict[Configuration, frozenset[Configuration]] = {}
    barbs_cache: dict[Configuration, frozenset[int]] = {}

    def moves(g):
        m = moves_cache.get(g)
        if m is None:
            if len(moves_cache) >= cap:
                raise StateCapExceeded(cap)
            m = frozenset(reduction_closure(g, cs, cap) if weak else reduce(g, cs))
            moves_cache[g] = m
        return m

    def barbs(g):
        b = barbs_cache.get(g)
        if b is None:
            if weak:
                b = frozenset().union(*(cs.downset(h.store) for h in moves(g)))
            else:
                b = cs.downset(g.store)
            barbs_cache[g] = b
        return b

    def extend(g, a):
        return Configuration(g.process, cs.lub(g.store, a))

    start = (g1, g2)
    deps: dict[tuple, list[tuple]] = {}
    queue = deque([start])
    seen = {start}
    while queue:
        pair = queue.popleft()
        x, y = pair
        succ = [(extend(x, a), extend(y, a)) for a in cs.elements]
        succ += [(x2, y2) for x2 in moves(x) for y2 in moves(y)]
        deps[pair] = succ
        for q in succ:
            if q not in seen:
                seen.add(q)
                queue.append(q)

    users = defaultdict(list)
    for pair, succ in deps.items():
        for q in succ:
            users[q].append(pair)

    related = {p for p in deps if barbs(p[0]) == barbs(p[1])}

    def ok(pair):
        x, y = pair
        if any((extend(x, a), extend(y, a)) not in related for a in cs.elements):
            return False
        mx, my = moves(x), moves(y)
        if any(all((x2, y2) not in related for y2 in my) for x2 in mx):
            return False
        if any(all((x2, y2) not in related for x2 in mx) for y2 in my):
            return False
        return True

    work = deque(related)
    while work:
        pair = work.popleft()
        if pair in related and not ok(pair):
            related.discard(pair)
            work.extend(p for p in users[pair] if p in related)
    return OracleResult(start in related, len(deps), len(moves_cache))


def oracle_strong(g1: Configuration, g2: Configuration, cs: ConstraintSystem,
                  cap: int = DEFAULT_CAP) -> bool:
    return run_oracle(g1, g2, cs, weak=False, cap=cap).equivalent


def oracle_weak(g1: Configuration, g2: Configuration, cs: ConstraintSystem,
                cap: int = DEFAULT_CAP) -> bool:
    return run_oracle(g1, g2, cs, weak=True, cap=cap).equivalent
