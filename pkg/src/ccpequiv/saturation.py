"""Saturated transition relations.

``saturate_milner`` absorbs ``true`` steps around a single observable step.
``saturate_lub`` closes the relation under sequential composition, joining
labels with lub; since lub is idempotent and the state set is finite the
closure is finite.
"""
from __future__ import annotations

from collections import defaultdict, deque
from collections.abc import Callable
from typing import NamedTuple

from .lattice import ConstraintId
from .semantics import DEFAULT_CAP, Lts, LtsKind, Transition, labeled_steps, reachable
from .syntax import Configuration

Combine = Callable[[ConstraintId, ConstraintId], "ConstraintId | None"]


def _closure(lts: Lts, kind: LtsKind, combine: Combine) -> Lts:
    if lts.kind is LtsKind.PLAIN:
        plain = lts
    elif lts.kind is kind:
        plain = lts.plain
    else:
        raise ValueError(f"cannot apply {kind.value} saturation to a {lts.kind.value} LTS")
    true = lts.cs.true
    edges: set[tuple] = set()
    out = defaultdict(set)
    into = defaultdict(set)
    work = deque()

    def add(s, a, t):
        if (s, a, t) not in edges:
            edges.add((s, a, t))
            out[s].add((a, t))
            into[t].add((s, a))
            work.append((s, a, t))

    for g in lts.states:
        add(g, true, g)
    for t in lts.transitions:
        add(*t)
    while work:
        s, a, t = work.popleft()
        for b, u in list(out[t]):
            label = combine(a, b)
            if label is not None:
                add(s, label, u)
        for r, c in list(into[s]):
            label = combine(c, a)
            if label is not None:
                add(r, label, t)
    return Lts.build(lts.cs, lts.states, (Transition(*e) for e in edges),
                     lts.initials, kind, plain)


def saturate_milner(lts: Lts) -> Lts:
    true = lts.cs.true

    def combine(a, b):
        if a == true:
            return b
        if b == true:
            return a
        return None

    return _closure(lts, LtsKind.MILNER, combine)


def saturate_lub(lts: Lts) -> Lts:
    return _closure(lts, LtsKind.LUB, lts.cs.lub)


SATURATORS = {LtsKind.MILNER: saturate_milner, LtsKind.LUB: saturate_lub}


def saturate(lts: Lts, kind: LtsKind) -> Lts:
    return lts if kind is LtsKind.PLAIN else SATURATORS[kind](lts)


# ---------------------------------------------------------------------------
# soundness / completeness checks


class Violation(NamedTuple):
    transition: Transition
    reason: str


class _Cache:
    """Saturated systems rebuilt from single initial configurations."""

    def __init__(self, kind: LtsKind, cs, cap: int):
        self.kind, self.cs, self.cap = kind, cs, cap
        self.cache: dict[Configuration, Lts] = {}

    def from_(self, g: Configuration) -> Lts:
        lts = self.cache.get(g)
        if lts is None:
            lts = saturate(reachable([g], labeled_steps, self.cs, self.cap), self.kind)
            self.cache[g] = lts
        return lts


def soundness_violations(sat: Lts, cap: int = DEFAULT_CAP) -> list[Violation]:
    """Transitions ``<P,c> =a=> <P',c'>`` without ``<P,c lub a> =true=> <P',c'>``."""
    cs = sat.cs
    cache = _Cache(sat.kind, cs, cap)
    bad = []
    for t in sat.transitions:
        g = Configuration(t.source.process, cs.lub(t.source.store, t.label))
        other = cache.from_(g)
        if Transition(g, cs.true, t.target) not in other.transition_set:
            bad.append(Violation(t, "no silent move from the strengthened source"))
    return bad


def completeness_violations(sat: Lts, cap: int = DEFAULT_CAP) -> list[Violation]:
    """Silent moves of ``<P, c lub a>`` with no labeled move of ``<P,c>`` explaining them.

    For every state ``<P,c>`` and every ``a``, each ``<P, c lub a> =true=> <P',c'>``
    needs some ``<P,c> =alpha=> <P',c''>`` and ``b`` with ``alpha lub b = a``
    and ``c'' lub b = c'``.
    """
    cs = sat.cs
    cache = _Cache(sat.kind, cs, cap)
    bad = []
    for g in sat.states:
        by_target = defaultdict(list)
        for t in sat.successors[g]:
            by_target[t.target.process].append(t)
        for a in cs.elements:
            strong = Configuration(g.process, cs.lub(g.store, a))
            for t in cache.from_(strong).successors[strong]:
                if t.label != cs.true:
                    continue
                if not any(
                    cs.lub(u.label, b) == a and cs.lub(u.target.store, b) == t.target.store
                    for u in by_target[t.target.process]
                    for b in cs.elements
                ):
                    bad.append(Violation(t, f"unmatched from {g} under {cs.name(a)}"))
    return bad
