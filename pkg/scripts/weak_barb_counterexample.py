"""Why the weak check groups states by weak-barb profile, not weak-barb set.

Runs the refinement from both initial partitions on random pairs and counts
how often each disagrees with the oracle.

    python scripts/weak_barb_counterexample.py --pairs 500 --seed 0
"""
import argparse
import random

from ccpequiv import (atoms_lattice, extend_for_redundancy, initial_partition_weak, labeled_steps,
                      oracle_weak, parse_config, reachable, refine_ccp, saturate_lub)
from ccpequiv.randomgen import random_lattice, random_pair
from ccpequiv.syntax import show_config


def verdict(g1, g2, cs, stable):
    lts = extend_for_redundancy(saturate_lub(reachable([g1, g2], labeled_steps, cs)))
    return refine_ccp(lts, initial_partition_weak(lts, stable=stable)).same(g1, g2)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    cs = atoms_lattice(["a"])
    g1 = parse_config("<ask(a) -> tell(false), true>", {}, cs)
    g2 = parse_config("<tell(true), true>", {}, cs)
    print(f"{show_config(g1, cs)} vs {show_config(g2, cs)}")
    print(f"  oracle: {oracle_weak(g1, g2, cs)}  barb sets: {verdict(g1, g2, cs, False)}  "
          f"barb profiles: {verdict(g1, g2, cs, True)}")

    rng = random.Random(args.seed)
    wrong = {False: 0, True: 0}
    for _ in range(args.pairs):
        cs = random_lattice(rng)
        g1, g2 = random_pair(rng, cs)
        want = oracle_weak(g1, g2, cs)
        for stable in wrong:
            wrong[stable] += verdict(g1, g2, cs, stable) != want
    print(f"{args.pairs} random pairs: {wrong[False]} wrong with barb sets, "
          f"{wrong[True]} wrong with barb profiles")


if __name__ == "__main__":
    main()
