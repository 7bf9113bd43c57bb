import random

import pytest

from ccpequiv import load_spec
from ccpequiv.fixtures import path
from ccpequiv.randomgen import random_config, random_lattice, random_pair


@pytest.fixture(scope="session")
def running():
    return load_spec(path("running.ccp"))


@pytest.fixture(scope="session")
def fig2():
    return load_spec(path("fig2.ccp"))


@pytest.fixture(scope="session")
def fig4():
    return load_spec(path("fig4.ccp"))


def instance_family(n, seed):
    """``n`` (lattice, configuration) samples: <= 4 AST nodes, <= 16 elements."""
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        cs = random_lattice(rng)
        out.append((cs, random_config(rng, cs, max_nodes=4)))
    return out


def pair_family(n, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        cs = random_lattice(rng)
        out.append((cs, *random_pair(rng, cs, max_nodes=4)))
    return out
