"""Enumeration checks for the semantic laws the decision procedures rely on.

Each function returns a list of human-readable violations; an empty list
means the law holds on the given slice of the state space.
"""
from __future__ import annotations

from .lattice import ConstraintSystem
from .semantics import Lts, LtsKind, reduce, reduction_closure
from .syntax import Configuration, show_config


def labeled_soundness(lts: Lts) -> list[str]:
    """Every ``<P,c> -a-> <P',c'>`` has ``<P, c lub a> -> <P',c'>``."""
    cs = lts.cs
    bad = []
    for t in lts.transitions:
        g = Configuration(t.source.process, cs.lub(t.source.store, t.label))
        if t.target not in reduce(g, cs):
            bad.append(f"{_edge(t, cs)}: no reduction from {show_config(g, cs)}")
    return bad


def labeled_completeness(lts: Lts) -> list[str]:
    """Every reduction of ``<P, c lub a>`` is explained by a labeled step of ``<P,c>``."""
    cs = lts.cs
    bad = []
    for g in lts.states:
        steps = lts.successors[g]
        for a in cs.elements:
            strong = Configuration(g.process, cs.lub(g.store, a))
            for r in reduce(strong, cs):
                if not any(
                    t.target.process == r.process
                    and any(cs.lub(t.target.store, b) == r.store for b in cs.lub_solutions(t.label, a))
                    for t in steps
                ):
                    bad.append(f"{show_config(strong, cs)} -> {show_config(r, cs)} unexplained")
    return bad


def true_steps_are_reductions(lts: Lts) -> list[str]:
    """``true``-labeled steps of a plain LTS coincide with ``reduce``."""
    cs = lts.cs
    bad = []
    for g in lts.states:
        silent = {t.target for t in lts.successors[g] if t.label == cs.true}
        if silent != reduce(g, cs):
            bad.append(f"{show_config(g, cs)}: true steps differ from reductions")
    return bad


def closure_agreement(sat: Lts) -> list[str]:
    """``g =true=> g'`` iff ``g ->* g'``, and weak barbs agree, on a lub-saturated LTS."""
    if sat.kind is not LtsKind.LUB:
        raise ValueError("expected a lub-saturated LTS")
    cs = sat.cs
    bad = []
    for g in sat.states:
        silent = {t.target for t in sat.successors[g] if t.label == cs.true}
        closure = reduction_closure(g, cs)
        if silent != closure:
            bad.append(f"{show_config(g, cs)}: silent closure differs from ->*")
        barbs = frozenset().union(*(cs.downset(h.store) for h in closure))
        from_sat = frozenset().union(*(cs.downset(h.store) for h in silent))
        if barbs != from_sat:
            bad.append(f"{show_config(g, cs)}: weak barbs differ")
    return bad


def store_monotonicity(lts: Lts) -> list[str]:
    cs = lts.cs
    return [_edge(t, cs) for t in lts.transitions if not cs.leq(t.source.store, t.target.store)]


def _edge(t, cs: ConstraintSystem) -> str:
    return f"{show_config(t.source, cs)} --{cs.name(t.label)}--> {show_config(t.target, cs)}"
