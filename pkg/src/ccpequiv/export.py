"""Byte-stable DOT and JSON renderings of transition systems and verdicts."""
from __future__ import annotations

import json

from .equivalence import Partition, Verdict
from .semantics import Lts
from .syntax import show, show_config


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def lts_to_dot(lts: Lts) -> str:
    """Nodes labeled ``⟨term, store⟩``; ``true`` edge labels are omitted."""
    cs = lts.cs
    initials = set(lts.initials)
    lines = ["digraph lts {", "  rankdir=LR;", "  node [shape=box];"]
    for i, g in enumerate(lts.states):
        attrs = f"label={_quote(show_config(g, cs, '⟨⟩'))}"
        if g in initials:
            attrs += ", peripheries=2"
        lines.append(f"  s{i} [{attrs}];")
    for t in lts.transitions:
        src, dst = lts.index[t.source], lts.index[t.target]
        if t.label == cs.true:
            lines.append(f"  s{src} -> s{dst};")
        else:
            lines.append(f"  s{src} -> s{dst} [label={_quote(cs.name(t.label))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lts_to_dict(lts: Lts) -> dict:
    cs = lts.cs
    return {
        "kind": lts.kind.value,
        "states": [
            {"id": i, "term": show(g.process, cs), "store": cs.name(g.store)}
            for i, g in enumerate(lts.states)
        ],
        "transitions": [
            {"src": lts.index[t.source], "label": cs.name(t.label), "dst": lts.index[t.target]}
            for t in lts.transitions
        ],
        "initials": [lts.index[g] for g in lts.initials],
    }


def lts_to_json(lts: Lts) -> str:
    return json.dumps(lts_to_dict(lts), indent=2, ensure_ascii=False) + "\n"


def partition_to_list(part: Partition, cs) -> list[list[str]]:
    return [[show_config(g, cs) for g in grp] for grp in part.groups()]


def verdict_to_dict(verdict: Verdict, left, right) -> dict:
    cs = verdict.lts.cs
    w = verdict.witness
    witness = None
    if w is not None:
        witness = {"iteration": w.iteration, "kind": w.kind, "detail": w.detail}
        if w.transition is not None:
            t = w.transition
            witness["transition"] = {
                "src": show_config(t.source, cs),
                "label": cs.name(t.label),
                "dst": show_config(t.target, cs),
            }
    return {
        "mode": verdict.mode,
        "left": show_config(left, cs),
        "right": show_config(right, cs),
        "equivalent": verdict.equivalent,
        "iterations": verdict.iterations,
        "states": len(verdict.lts.states),
        "transitions": len(verdict.lts.transitions),
        "witness": witness,
        "final_partition": partition_to_list(verdict.final_partition, cs),
    }
