"""Seeded generators of small lattices, processes and configuration pairs."""
from __future__ import annotations

import random

from .lattice import ConstraintSystem, atoms_lattice, bounds_lattice, table_lattice
from .syntax import STOP, Ask, Configuration, Par, Process, Sum, Tell


def random_table_lattice(rng: random.Random, ground: int = 4, max_size: int = 16) -> ConstraintSystem:
    """A union-closed family of subsets of ``range(ground)`` as an explicit table.

    Such families need not be distributive (e.g. the diamond), which is the
    point of including them.
    """
    while True:
        family = {0}
        for _ in range(rng.randint(2, 5)):
            family.add(rng.randrange(1, 1 << ground))
        changed = True
        while changed:
            changed = False
            for a in list(family):
                for b in list(family):
                    if a | b not in family:
                        family.add(a | b)
                        changed = True
        family.discard(0)
        if len(family) + 2 <= max_size:
            break
    members = sorted(family, key=lambda m: (bin(m).count("1"), m))
    names = [f"e{m}" for m in members]
    order = [(f"e{a}", f"e{b}") for a in members for b in members if a != b and a & ~b == 0]
    return table_lattice(names, order)


def random_lattice(rng: random.Random) -> ConstraintSystem:
    kind = rng.choice(["atoms", "atoms", "table", "bounds"])
    if kind == "atoms":
        return atoms_lattice(["a", "b", "c"][: rng.randint(1, 3)])
    if kind == "table":
        return random_table_lattice(rng)
    preds = ["x<1", "x<2", "x<3", "x>0", "y=0", "y<2"]
    base = rng.sample(preds, rng.randint(1, 3))
    cs = bounds_lattice([("x", range(0, 4)), ("y", range(0, 3))], base)
    return cs if len(cs) <= 16 else atoms_lattice(["a", "b"])


def random_process(rng: random.Random, cs: ConstraintSystem, nodes: int) -> Process:
    """A process with exactly ``nodes`` AST nodes."""
    c = rng.choice(list(cs.elements))
    if nodes <= 1:
        return STOP if rng.random() < 0.25 else Tell(c)
    if nodes == 2 or rng.random() < 0.4:
        return Ask(c, random_process(rng, cs, nodes - 1))
    left = rng.randint(1, nodes - 2)
    ctor = Par if rng.random() < 0.5 else Sum
    return ctor(random_process(rng, cs, left), random_process(rng, cs, nodes - 1 - left))


def random_store(rng: random.Random, cs: ConstraintSystem) -> int:
    return cs.true if rng.random() < 0.6 else rng.choice(list(cs.elements))


def random_config(rng: random.Random, cs: ConstraintSystem, max_nodes: int = 4) -> Configuration:
    return Configuration(random_process(rng, cs, rng.randint(1, max_nodes)), random_store(rng, cs))


def random_pair(rng: random.Random, cs: ConstraintSystem, max_nodes: int = 4):
    """Two configurations with the same store, biased towards near-equivalent pairs."""
    store = random_store(rng, cs)
    p = random_process(rng, cs, rng.randint(1, max_nodes))
    roll = rng.random()
    if roll < 0.35:
        q = random_process(rng, cs, rng.randint(1, max_nodes))
    elif roll < 0.6:
        q = Sum(p, random_process(rng, cs, rng.randint(1, max(1, max_nodes - 1))))
    elif roll < 0.8:
        q = Ask(cs.true, p) if rng.random() < 0.5 else Par(p, STOP)
    else:
        q = _mutate(rng, cs, p)
    return Configuration(p, store), Configuration(q, store)


def _mutate(rng: random.Random, cs: ConstraintSystem, p: Process) -> Process:
    if isinstance(p, Tell):
        return Tell(rng.choice(list(cs.elements)))
    if isinstance(p, Ask):
        if rng.random() < 0.5:
            return Ask(rng.choice(list(cs.elements)), p.body)
        return Ask(p.c, _mutate(rng, cs, p.body))
    if isinstance(p, (Par, Sum)):
        if rng.random() < 0.5:
            return type(p)(_mutate(rng, cs, p.left), p.right)
        return type(p)(p.right, p.left)
    return Tell(cs.true)
