"""Command-line front end.

Exit codes: 0 equivalent (or success), 1 not equivalent, 2 usage or load
error, 3 state cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import export
from .equivalence import CHECKS, extend_for_redundancy
from .errors import LoadError, StateCapExceeded
from .oracle import run_oracle
from .saturation import saturate
from .semantics import DEFAULT_CAP, LtsKind, labeled_steps, reachable
from .specfile import load_spec
from .syntax import show_config

EXIT_EQUIVALENT, EXIT_DIFFERENT, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

SATURATION = {"none": LtsKind.PLAIN, "milner": LtsKind.MILNER, "full": LtsKind.LUB}


def cmd_check(args) -> int:
    spec = load_spec(args.file)
    left, right = spec.config(args.left), spec.config(args.right)
    verdict = CHECKS[args.mode](left, right, spec.cs, cap=args.max_states)
    cs = spec.cs
    if args.json:
        doc = export.verdict_to_dict(verdict, left, right)
        if args.trace_partitions:
            doc["trace"] = [export.partition_to_list(p, cs) for p in verdict.history]
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        if args.trace_partitions:
            for i, part in enumerate(verdict.history):
                print(f"P^{i}: {part.show(cs)}")
        print(f"mode: {verdict.mode}")
        print(f"left: {show_config(left, cs)}")
        print(f"right: {show_config(right, cs)}")
        print(f"states: {len(verdict.lts.states)}")
        print(f"iterations: {verdict.iterations}")
        print(f"verdict: {'equivalent' if verdict.equivalent else 'not equivalent'}")
        if verdict.witness is not None:
            print(f"witness (iteration {verdict.witness.iteration}): {verdict.witness.detail}")
    return EXIT_EQUIVALENT if verdict.equivalent else EXIT_DIFFERENT


def cmd_lts(args) -> int:
    spec = load_spec(args.file)
    initials = [spec.config(c) for c in args.config]
    lts = saturate(reachable(initials, labeled_steps, spec.cs, args.max_states),
                   SATURATION[args.saturate])
    if args.extend:
        lts = extend_for_redundancy(lts, cap=args.max_states)
    out = export.lts_to_dot(lts) if args.format == "dot" else export.lts_to_json(lts)
    sys.stdout.write(out)
    return EXIT_EQUIVALENT


def cmd_oracle(args) -> int:
    spec = load_spec(args.file)
    left, right = spec.config(args.left), spec.config(args.right)
    result = run_oracle(left, right, spec.cs, weak=args.mode == "weak", cap=args.max_states)
    cs = spec.cs
    if args.json:
        print(json.dumps({
            "mode": args.mode,
            "left": show_config(left, cs),
            "right": show_config(right, cs),
            "equivalent": result.equivalent,
            "pairs": result.pairs,
            "configurations": result.configurations,
        }, indent=2, ensure_ascii=False))
    else:
        print(f"mode: {args.mode} (oracle)")
        print(f"left: {show_config(left, cs)}")
        print(f"right: {show_config(right, cs)}")
        print(f"pair universe: {result.pairs} pairs over {result.configurations} configurations")
        print(f"verdict: {'equivalent' if result.equivalent else 'not equivalent'}")
    return EXIT_EQUIVALENT if result.equivalent else EXIT_DIFFERENT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccpequiv",
        description="Decide strong and weak saturated barbed bisimilarity of ccp configurations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="spec file (.ccp)")
        p.add_argument("--max-states", type=int, default=DEFAULT_CAP, metavar="N",
                       help=f"exploration cap (default {DEFAULT_CAP})")

    p = sub.add_parser("check", help="decide equivalence by partition refinement")
    common(p)
    p.add_argument("--left", required=True, help="configuration literal or [config] name")
    p.add_argument("--right", required=True, help="configuration literal or [config] name")
    p.add_argument("--mode", choices=list(CHECKS), default="strong")
    p.add_argument("--trace-partitions", action="store_true", help="print every partition")
    p.add_argument("--json", action="store_true", help="emit the verdict as JSON")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("lts", help="export the (saturated) transition system")
    common(p)
    p.add_argument("--config", action="append", required=True,
                   help="initial configuration; repeat for several")
    p.add_argument("--saturate", choices=list(SATURATION), default="none")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--extend", action="store_true",
                   help="add the configurations needed for redundancy checks")
    p.set_defaults(func=cmd_lts)

    p = sub.add_parser("oracle", help="decide equivalence by brute force from the definition")
    common(p)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--mode", choices=["strong", "weak"], default="strong")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_states <= 0:
        parser.error("--max-states must be positive")
    try:
        return args.func(args)
    except LoadError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except StateCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
