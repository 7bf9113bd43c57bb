"""Reduction and labeled semantics, barbs, and finite state-space construction."""
from __future__ import annotations

import enum
from collections import deque
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import NamedTuple

from .errors import StateCapExceeded
from .lattice import ConstraintId, ConstraintSystem
from .syntax import STOP, Ask, Configuration, Par, Process, Stop, Sum, Tell, show

DEFAULT_CAP = 10_000


class Transition(NamedTuple):
    source: Configuration
    label: ConstraintId
    target: Configuration


class LtsKind(str, enum.Enum):
    PLAIN = "plain"
    MILNER = "milner-saturated"
    LUB = "lub-saturated"


Step = Callable[[Configuration, ConstraintSystem], Iterable[Transition]]


# ---------------------------------------------------------------------------
# one-step relations


def reduce(g: Configuration, cs: ConstraintSystem) -> set[Configuration]:
    """One-step unlabeled reducts of ``g``."""
    p, d = g.process, g.store
    if isinstance(p, Stop):
        return set()
    if isinstance(p, Tell):
        return {Configuration(STOP, cs.lub(d, p.c))}
    if isinstance(p, Ask):
        return {Configuration(p.body, d)} if cs.leq(p.c, d) else set()
    if isinstance(p, Par):
        out = {Configuration(Par(r.process, p.right), r.store)
               for r in reduce(Configuration(p.left, d), cs)}
        out |= {Configuration(Par(p.left, r.process), r.store)
                for r in reduce(Configuration(p.right, d), cs)}
        return out
    if isinstance(p, Sum):
        return reduce(Configuration(p.left, d), cs) | reduce(Configuration(p.right, d), cs)
    raise TypeError(f"not a process: {p!r}")


def reduction_steps(g: Configuration, cs: ConstraintSystem) -> list[Transition]:
    """The reduction relation as ``true``-labeled transitions."""
    return [Transition(g, cs.true, r) for r in reduce(g, cs)]


def labeled_steps(g: Configuration, cs: ConstraintSystem) -> list[Transition]:
    """Labeled transitions: the label is a minimal constraint the environment must add."""
    return list(dict.fromkeys(
        Transition(g, label, Configuration(q, store))
        for label, q, store in _labeled(g.process, g.store, cs)))


def _labeled(p: Process, d: ConstraintId, cs: ConstraintSystem):
    if isinstance(p, Tell):
        yield cs.true, STOP, cs.lub(d, p.c)
    elif isinstance(p, Ask):
        for alpha in cs.minimal_enablers(p.c, d):
            yield alpha, p.body, cs.lub(d, alpha)
    elif isinstance(p, Par):
        for alpha, q, e in _labeled(p.left, d, cs):
            yield alpha, Par(q, p.right), e
        for alpha, q, e in _labeled(p.right, d, cs):
            yield alpha, Par(p.left, q), e
    elif isinstance(p, Sum):
        yield from _labeled(p.left, d, cs)
        yield from _labeled(p.right, d, cs)


def barb_store(g: Configuration) -> ConstraintId:
    return g.store


def satisfies_barb(g: Configuration, e: ConstraintId, cs: ConstraintSystem) -> bool:
    return cs.leq(e, g.store)


# ---------------------------------------------------------------------------
# transition systems


@lru_cache(maxsize=1 << 16)
def _shown(p: Process, cs: ConstraintSystem) -> str:
    return show(p, cs)


def state_key(cs: ConstraintSystem):
    """Canonical sort key for configurations: pretty-printed term, then store."""
    return lambda g: (_shown(g.process, cs), g.store)


def transition_key(cs: ConstraintSystem):
    key = state_key(cs)
    return lambda t: (key(t.source), t.label, key(t.target))


@dataclass(frozen=True, eq=False)
class Lts:
    """A finite labeled transition system over configurations.

    States and transitions are stored in canonical order.  For saturated
    kinds ``plain`` is the underlying unsaturated system.
    """

    cs: ConstraintSystem
    states: tuple[Configuration, ...]
    transitions: tuple[Transition, ...]
    initials: tuple[Configuration, ...]
    kind: LtsKind = LtsKind.PLAIN
    plain: Lts | None = None

    @classmethod
    def build(cls, cs, states, transitions, initials, kind=LtsKind.PLAIN, plain=None) -> Lts:
        states = sorted(set(states), key=state_key(cs))
        transitions = sorted(set(transitions), key=transition_key(cs))
        initials = sorted(set(initials), key=state_key(cs))
        known = set(states)
        for t in transitions:
            if t.source not in known or t.target not in known:
                raise ValueError(f"transition {t} leaves the state set")
        if not known.issuperset(initials):
            raise ValueError("initial states must be states")
        return cls(cs, tuple(states), tuple(transitions), tuple(initials), LtsKind(kind), plain)

    @cached_property
    def index(self) -> dict[Configuration, int]:
        return {g: i for i, g in enumerate(self.states)}

    @cached_property
    def successors(self) -> dict[Configuration, tuple[Transition, ...]]:
        out: dict[Configuration, list[Transition]] = {g: [] for g in self.states}
        for t in self.transitions:
            out[t.source].append(t)
        return {g: tuple(ts) for g, ts in out.items()}

    @cached_property
    def transition_set(self) -> frozenset[Transition]:
        return frozenset(self.transitions)

    def __contains__(self, g: Configuration) -> bool:
        return g in self.index

    def __len__(self) -> int:
        return len(self.states)

    def __repr__(self) -> str:
        return (f"Lts(kind={self.kind.value}, states={len(self.states)}, "
                f"transitions={len(self.transitions)})")


def reachable(
    initials: Iterable[Configuration],
    step: Step,
    cs: ConstraintSystem,
    cap: int = DEFAULT_CAP,
    extra: Iterable[Configuration] = (),
) -> Lts:
    """Breadth-first closure of ``initials`` (and ``extra`` roots) under ``step``."""
    if cap <= 0:
        raise ValueError("cap must be positive")
    initials = list(dict.fromkeys(initials))
    roots = list(dict.fromkeys([*initials, *extra]))
    seen = set(roots)
    if len(seen) > cap:
        raise StateCapExceeded(cap)
    queue = deque(sorted(roots, key=state_key(cs)))
    transitions = []
    key = state_key(cs)
    while queue:
        g = queue.popleft()
        out = sorted(step(g, cs), key=lambda t: (t.label, key(t.target)))
        for t in out:
            transitions.append(t)
            if t.target not in seen:
                if len(seen) >= cap:
                    raise StateCapExceeded(cap)
                seen.add(t.target)
                queue.append(t.target)
    return Lts.build(cs, seen, transitions, initials)


def weak_barb_set(g: Configuration, lts: Lts) -> frozenset[ConstraintId]:
    """Every ``e`` entailed by a store reachable from ``g`` through ``true``-labeled steps."""
    if lts.kind is LtsKind.PLAIN:
        raise ValueError("weak barbs are read off a saturated LTS")
    cs = lts.cs
    out: set[ConstraintId] = set()
    for t in lts.successors[g]:
        if t.label == cs.true:
            out |= cs.downset(t.target.store)
    out |= cs.downset(g.store)
    return frozenset(out)


def weak_barb_profile(g: Configuration, lts: Lts) -> tuple[frozenset[ConstraintId], ...]:
    """Weak barbs of ``<P, c lub e>`` for every ``e``, indexed by ``e``.

    Read off the lub-saturated transitions of ``g`` alone: ``<P, c lub e>``
    reaches ``<P', c' lub e>`` exactly when ``g`` has a transition with a
    label below ``e`` into ``<P', c'>``.  Equal profiles survive any common
    store extension, which plain weak-barb sets do not.
    """
    if lts.kind is not LtsKind.LUB:
        raise ValueError("the weak-barb profile needs the lub-saturated LTS")
    cs = lts.cs
    moves = [(t.label, t.target.store) for t in lts.successors[g]]
    return tuple(
        frozenset().union(*(cs.downset(cs.lub(c, e)) for a, c in moves if cs.leq(a, e)),
                          cs.downset(cs.lub(g.store, e)))
        for e in cs.elements)


def reduction_closure(g: Configuration, cs: ConstraintSystem, cap: int = DEFAULT_CAP) -> set[Configuration]:
    """Reflexive-transitive closure of ``reduce`` from ``g``."""
    seen = {g}
    stack = [g]
    while stack:
        for r in reduce(stack.pop(), cs):
            if r not in seen:
                if len(seen) >= cap:
                    raise StateCapExceeded(cap)
                seen.add(r)
                stack.append(r)
    return seen
