"""Redundancy, partition refinement and the strong/weak equivalence checks.

The strong check runs ccp partition refinement on the labeled LTS starting
from the partition by store.  The weak check does the same on the
lub-saturated LTS starting from the partition by weak-barb profile (weak
barbs after every common store extension).  In both, only
transitions that are irredundant w.r.t. the current partition must be
matched, and the state set is first extended with every configuration a
domination check may ask about.
"""
from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from .errors import MissingDerivedState
from .lattice import ConstraintId, ConstraintSystem
from .saturation import saturate
from .semantics import (
    DEFAULT_CAP,
    Lts,
    LtsKind,
    Step,
    Transition,
    labeled_steps,
    reachable,
    transition_key,
    weak_barb_profile,
    weak_barb_set,
)
from .syntax import Configuration, show_config


@dataclass(frozen=True)
class Partition:
    """Total map from states to dense block ids, numbered by first occurrence."""

    blocks: Mapping[Configuration, int]

    @classmethod
    def from_keys(cls, states: Iterable[Configuration],
                  key: Callable[[Configuration], Hashable]) -> Partition:
        ids: dict[Hashable, int] = {}
        blocks = {}
        for g in states:
            blocks[g] = ids.setdefault(key(g), len(ids))
        return cls(blocks)

    def block(self, g: Configuration) -> int:
        return self.blocks[g]

    def same(self, g1: Configuration, g2: Configuration) -> bool:
        return self.blocks[g1] == self.blocks[g2]

    def __contains__(self, g: Configuration) -> bool:
        return g in self.blocks

    def __len__(self) -> int:
        return len(set(self.blocks.values()))

    def groups(self) -> list[list[Configuration]]:
        out: dict[int, list[Configuration]] = {}
        for g, b in self.blocks.items():
            out.setdefault(b, []).append(g)
        return [out[b] for b in sorted(out)]

    def show(self, cs: ConstraintSystem) -> str:
        return " ".join(
            "{" + ", ".join(show_config(g, cs) for g in grp) + "}" for grp in self.groups())


@dataclass(frozen=True)
class Witness:
    iteration: int
    kind: str  # "barb" or "transition"
    detail: str
    transition: Transition | None = None


@dataclass
class Verdict:
    equivalent: bool
    final_partition: Partition
    iterations: int
    witness: Witness | None
    mode: str
    lts: Lts
    history: list[Partition] = field(default_factory=list)


# ---------------------------------------------------------------------------
# derivation and domination


def derives(t: Transition, beta: ConstraintId, store: ConstraintId, cs: ConstraintSystem) -> bool:
    """Does ``t`` derive the transition with label ``beta`` into ``<P', store>``?

    True iff some ``e`` has ``label(t) lub e == beta`` and
    ``store(target(t)) lub e == store``.
    """
    c1 = t.target.store
    return any(cs.lub(c1, e) == store for e in cs.lub_solutions(t.label, beta))


def derived_targets(t: Transition, beta: ConstraintId, cs: ConstraintSystem) -> list[Configuration]:
    """Every ``<P', c' lub e>`` with ``label(t) lub e == beta``, in id order of ``e``."""
    p, c1 = t.target.process, t.target.store
    return list(dict.fromkeys(
        Configuration(p, cs.lub(c1, e)) for e in cs.lub_solutions(t.label, beta)))


def dominates_wrt(t: Transition, t2: Transition, part: Partition, cs: ConstraintSystem) -> bool:
    if t.source != t2.source:
        raise ValueError("domination compares transitions from the same configuration")
    if t.label == t2.label:
        return False
    for d in derived_targets(t, t2.label, cs):
        if d not in part:
            raise MissingDerivedState(f"{show_config(d, cs)} is not in the partition")
        if part.same(d, t2.target):
            return True
    return False


def _derived_configurations(lts: Lts) -> set[Configuration]:
    cs = lts.cs
    out = set()
    for g in lts.states:
        ts = lts.successors[g]
        for t in ts:
            for t2 in ts:
                if t.label != t2.label:
                    out.update(derived_targets(t, t2.label, cs))
    return out


def extend_for_redundancy(lts: Lts, step: Step = labeled_steps, cap: int = DEFAULT_CAP) -> Lts:
    """Add every configuration a domination check may need, closing under ``step``.

    For saturated kinds the underlying plain system is extended and
    re-saturated on each round.  Repeats until no new configuration appears.
    """
    cs = lts.cs
    plain = lts if lts.kind is LtsKind.PLAIN else lts.plain
    current = lts
    while True:
        missing = [d for d in _derived_configurations(current) if d not in current]
        if not missing:
            return current
        plain = reachable(plain.initials, step, cs, cap, extra=[*plain.states, *missing])
        current = saturate(plain, lts.kind)


class _Irredundancy:
    """Per-transition lists of derived configurations, computed once per LTS."""

    def __init__(self, lts: Lts):
        cs = lts.cs
        self.lts = lts
        self.table: dict[Transition, list[Configuration]] = {}
        for g in lts.states:
            ts = lts.successors[g]
            for t2 in ts:
                derived = []
                for t in ts:
                    if t.label != t2.label:
                        derived.extend(derived_targets(t, t2.label, cs))
                self.table[t2] = list(dict.fromkeys(derived))

    def irredundant(self, g: Configuration, part: Partition) -> list[Transition]:
        out = []
        blocks = part.blocks
        for t2 in self.lts.successors[g]:
            target = blocks[t2.target]
            for d in self.table[t2]:
                b = blocks.get(d)
                if b is None:
                    raise MissingDerivedState(
                        f"{show_config(d, self.lts.cs)} is not in the partition")
                if b == target:
                    break
            else:
                out.append(t2)
        return out


# ---------------------------------------------------------------------------
# partition refinement


def _refine(lts: Lts, initial: Partition,
            signature: Callable[[Configuration, Partition], Hashable]) -> list[Partition]:
    history = [initial]
    part = initial
    while True:
        new = Partition.from_keys(lts.states, lambda g: (part.blocks[g], signature(g, part)))
        history.append(new)
        if len(new) == len(part):
            return history
        part = new


def refine_standard(lts: Lts, history: list[Partition] | None = None) -> Partition:
    """Plain bisimulation: every transition must be matched with the same label."""
    def signature(g, part):
        return frozenset((t.label, part.blocks[t.target]) for t in lts.successors[g])

    runs = _refine(lts, Partition.from_keys(lts.states, lambda g: 0), signature)
    if history is not None:
        history.extend(runs)
    return runs[-1]


def refine_ccp(lts: Lts, initial: Partition, history: list[Partition] | None = None) -> Partition:
    """Refine ``initial`` until only irredundant transitions distinguish blocks.

    Two states stay together when their irredundant transitions, read as
    (label, target block) pairs, coincide.  ``history`` receives every
    partition, the initial one first; its length minus one is the number of
    refinement steps taken.
    """
    irr = _Irredundancy(lts)

    def signature(g, part):
        return frozenset((t.label, part.blocks[t.target]) for t in irr.irredundant(g, part))

    runs = _refine(lts, initial, signature)
    if history is not None:
        history.extend(runs)
    return runs[-1]


def initial_partition_strong(lts: Lts) -> Partition:
    return Partition.from_keys(lts.states, lambda g: g.store)


def initial_partition_weak(lts: Lts, stable: bool | None = None) -> Partition:
    """Group states by weak barbs.

    With ``stable`` (the default on the lub-saturated LTS) states are grouped
    by their weak-barb profile, i.e. the weak barbs after every common store
    extension.  Plain weak-barb sets are not enough there: a ``true``
    self-loop dominates every transition whose target is equivalent to the
    extended source, so the refinement never compares the extended states.
    For instance ``<ask(a) -> tell(false), true>`` and ``<tell(true), true>``
    share their weak barbs and would end up in one block.
    """
    if stable is None:
        stable = lts.kind is LtsKind.LUB
    key = weak_barb_profile if stable else weak_barb_set
    return Partition.from_keys(lts.states, lambda g: key(g, lts))


# ---------------------------------------------------------------------------
# decision procedures


def _decide(g1, g2, cs, kind: LtsKind, mode: str, cap: int) -> Verdict:
    plain = reachable([g1, g2], labeled_steps, cs, cap)
    lts = extend_for_redundancy(saturate(plain, kind), cap=cap)
    initial = initial_partition_strong(lts) if kind is LtsKind.PLAIN else initial_partition_weak(lts)
    history: list[Partition] = []
    final = refine_ccp(lts, initial, history)
    equivalent = final.same(g1, g2)
    witness = None if equivalent else _witness(lts, history, g1, g2)
    return Verdict(equivalent, final, len(history) - 1, witness, mode, lts, history)


def check_strong(g1: Configuration, g2: Configuration, cs: ConstraintSystem,
                 cap: int = DEFAULT_CAP) -> Verdict:
    """Strong saturated barbed bisimilarity via irredundant bisimilarity."""
    return _decide(g1, g2, cs, LtsKind.PLAIN, "strong", cap)


def check_weak(g1: Configuration, g2: Configuration, cs: ConstraintSystem,
               cap: int = DEFAULT_CAP) -> Verdict:
    """Weak saturated barbed bisimilarity via the lub-saturated LTS."""
    return _decide(g1, g2, cs, LtsKind.LUB, "weak", cap)


def check_weak_milner(g1: Configuration, g2: Configuration, cs: ConstraintSystem,
                      cap: int = DEFAULT_CAP) -> Verdict:
    """The same pipeline over Milner's saturation.

    This does not decide weak saturated barbed bisimilarity; it exists to
    exhibit pairs where Milner's saturation separates weakly equivalent
    configurations.
    """
    return _decide(g1, g2, cs, LtsKind.MILNER, "weak-milner", cap)


CHECKS = {"strong": check_strong, "weak": check_weak, "weak-milner": check_weak_milner}


def _witness(lts: Lts, history: Sequence[Partition], g1, g2) -> Witness:
    cs = lts.cs
    n = next(i for i, p in enumerate(history) if not p.same(g1, g2))
    if n == 0:
        if lts.kind is LtsKind.PLAIN:
            detail = (f"barbs differ: store {cs.name(g1.store)} vs {cs.name(g2.store)}")
        else:
            if lts.kind is LtsKind.LUB:
                p1, p2 = weak_barb_profile(g1, lts), weak_barb_profile(g2, lts)
            else:
                p1, p2 = (weak_barb_set(g1, lts),), (weak_barb_set(g2, lts),)
            e = next(i for i, (b1, b2) in enumerate(zip(p1, p2)) if b1 != b2)
            b1, b2 = p1[e], p2[e]
            only = sorted((b1 - b2) or (b2 - b1))
            who = show_config(g1 if b1 - b2 else g2, cs)
            detail = f"weak barbs differ: only {who} has weak barb {cs.name(only[-1])}"
            if len(p1) > 1 and e != cs.true:
                detail += f" once {cs.name(e)} is added to both stores"
        return Witness(0, "barb", detail)

    prev = history[n - 1]
    irr = _Irredundancy(lts)
    original = lts.plain.transition_set if lts.plain is not None else lts.transition_set
    tkey = transition_key(cs)

    # prefer edges of the unsaturated system, then moves of the left configuration
    def preference(c):
        t, side = c[0], c[3]
        return (t not in original, side, tkey(t))

    candidates = []
    for side, (a, b) in enumerate(((g1, g2), (g2, g1))):
        answers = {(u.label, prev.blocks[u.target]) for u in lts.successors[b]}
        for t in irr.irredundant(a, prev):
            if (t.label, prev.blocks[t.target]) not in answers:
                candidates.append((t, b, "has no matching transition", side))
    if not candidates:
        for side, (a, b) in enumerate(((g1, g2), (g2, g1))):
            answers = {(u.label, prev.blocks[u.target]) for u in irr.irredundant(b, prev)}
            for t in irr.irredundant(a, prev):
                if (t.label, prev.blocks[t.target]) not in answers:
                    candidates.append((t, b, "matches it only with a redundant transition", side))
    t, other, why, _ = min(candidates, key=preference)
    detail = (f"{show_config(t.source, cs)} --{cs.name(t.label)}--> {show_config(t.target, cs)} "
              f"is irredundant and {show_config(other, cs)} {why}")
    return Witness(n, "transition", detail, t)
