"""Show where Milner's saturation and the lub saturation part ways.

Prints both saturated systems for the bundled fig2 and fig4 fixtures, the
verdicts of every weak procedure, and the completeness failures of Milner's
relation.

    python scripts/milner_divergence.py [--dot OUTDIR]
"""
import argparse
from pathlib import Path

from ccpequiv import (check_weak, check_weak_milner, labeled_steps, load_spec, oracle_weak,
                      reachable, saturate_lub, saturate_milner)
from ccpequiv.export import lts_to_dot
from ccpequiv.fixtures import path
from ccpequiv.saturation import completeness_violations
from ccpequiv.syntax import show_config


def edges(lts):
    cs = lts.cs
    return sorted(
        f"{show_config(t.source, cs)} =={cs.name(t.label)}==> {show_config(t.target, cs)}"
        for t in lts.transitions if t.source != t.target)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dot", type=Path, help="also write DOT files into this directory")
    args = ap.parse_args()

    for name, left, right in (("fig2.ccp", "A", "B"), ("fig4.ccp", "P", "Q")):
        spec = load_spec(path(name))
        cs = spec.cs
        g1, g2 = spec.configs[left], spec.configs[right]
        base = reachable([g1, g2], labeled_steps, cs)
        milner, lub = saturate_milner(base), saturate_lub(base)
        print(f"== {name}: {show_config(g1, cs)} vs {show_config(g2, cs)}")
        only_lub = sorted(set(edges(lub)) - set(edges(milner)))
        print(f"   {len(edges(milner))} Milner edges, {len(edges(lub))} lub edges; only in lub:")
        for line in only_lub:
            print("     " + line)
        print(f"   Milner completeness failures: {len(completeness_violations(milner))}")
        print(f"   lub completeness failures:    {len(completeness_violations(lub))}")
        m = check_weak_milner(g1, g2, cs)
        print(f"   oracle: {oracle_weak(g1, g2, cs)}  weak: {check_weak(g1, g2, cs).equivalent}  "
              f"weak-milner: {m.equivalent}")
        if m.witness is not None:
            print(f"   Milner witness: {m.witness.detail}")
        if args.dot:
            args.dot.mkdir(parents=True, exist_ok=True)
            stem = Path(name).stem
            (args.dot / f"{stem}_milner.dot").write_text(lts_to_dot(milner), encoding="utf-8")
            (args.dot / f"{stem}_lub.dot").write_text(lts_to_dot(lub), encoding="utf-8")


if __name__ == "__main__":
    main()
