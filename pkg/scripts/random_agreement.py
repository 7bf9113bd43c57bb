"""Compare the refinement checks with the brute-force oracle on random pairs.

    python scripts/random_agreement.py --pairs 500 --seed 0 --max-nodes 4
"""
import argparse
import random
import time
from collections import Counter

from ccpequiv import check_strong, check_weak, oracle_strong, oracle_weak
from ccpequiv.randomgen import random_lattice, random_pair
from ccpequiv.syntax import show_config


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-nodes", type=int, default=4)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    tally = Counter()
    disagreements = []
    start = time.perf_counter()
    for _ in range(args.pairs):
        cs = random_lattice(rng)
        g1, g2 = random_pair(rng, cs, args.max_nodes)
        for mode, check, oracle in (("strong", check_strong, oracle_strong),
                                    ("weak", check_weak, oracle_weak)):
            got, want = check(g1, g2, cs).equivalent, oracle(g1, g2, cs)
            tally[mode, want] += 1
            if got != want:
                disagreements.append((mode, cs, g1, g2, got, want))
    elapsed = time.perf_counter() - start

    for mode in ("strong", "weak"):
        print(f"{mode:6s}: {tally[mode, True]:4d} equivalent, {tally[mode, False]:4d} not")
    print(f"disagreements: {len(disagreements)} in {elapsed:.1f}s")
    for mode, cs, g1, g2, got, want in disagreements[:10]:
        print(f"  {mode}: {show_config(g1, cs)} vs {show_config(g2, cs)} "
              f"check={got} oracle={want} ({cs.kind}, {len(cs)} elements)")
    return 1 if disagreements else 0


if __name__ == "__main__":
    raise SystemExit(main())
