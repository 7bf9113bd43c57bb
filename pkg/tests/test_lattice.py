import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccpequiv import LoadError, atoms_lattice, bounds_lattice, table_lattice
from ccpequiv.randomgen import random_table_lattice


def running_lattice():
    return bounds_lattice([("x", range(10)), ("y", range(10)), ("z", range(10))],
                          ["x<7", "x<5", "z<7", "z<5", "y=1"])


# ---------------------------------------------------------------- atoms

def test_atoms_basic_laws():
    cs = atoms_lattice(["a", "b"])
    a, b = cs.lookup("a"), cs.lookup("b")
    assert cs.name(cs.lub(a, b)) == "a & b"
    assert cs.lub(a, cs.true) == a
    assert len(cs) == 5  # four subsets plus a separate false


def test_atoms_false_absorbs():
    cs = atoms_lattice(["a"])
    assert cs.lub(cs.lookup("a"), cs.false) == cs.false
    assert cs.lookup("a") != cs.false


def test_atoms_rejects_duplicates():
    with pytest.raises(LoadError):
        atoms_lattice(["a", "a"])


def test_atoms_four_union():
    cs = atoms_lattice(["alpha", "beta", "c", "d"])
    assert cs.lub(cs.lookup("alpha"), cs.lookup("beta")) == cs.parse("alpha & beta")
    assert cs.parse("beta & alpha") == cs.parse("alpha & beta")


# ---------------------------------------------------------------- bounds

def test_bounds_order_matches_inclusion():
    cs = running_lattice()
    x7, x5 = cs.lookup("x<7"), cs.lookup("x<5")
    assert cs.leq(x7, x5)
    assert not cs.leq(x5, x7)
    assert cs.lub(x7, x5) == x5


def test_bounds_fresh_join_matches_assignment_intersection():
    # independent oracle: enumerate assignments over the declared ranges
    preds = {"x<7": lambda v: v[0] < 7, "x<5": lambda v: v[0] < 5,
             "z<7": lambda v: v[2] < 7, "z<5": lambda v: v[2] < 5, "y=1": lambda v: v[1] == 1}
    points = list(itertools.product(range(10), repeat=3))

    def ext(names):
        return frozenset(p for p in points if all(preds[n](p) for n in names))

    cs = running_lattice()
    conj = {c: ext(cs.name(c).split(" & ")) if c not in (cs.true, cs.false) else None
            for c in cs.elements}
    conj[cs.true] = frozenset(points)
    conj[cs.false] = frozenset()
    for c in cs.elements:
        for d in cs.elements:
            assert cs.leq(c, d) == (conj[c] >= conj[d])
            if conj[c] & conj[d]:
                assert conj[cs.lub(c, d)] == conj[c] & conj[d]
            else:
                assert cs.lub(c, d) == cs.false
    j = cs.lub(cs.lookup("x<7"), cs.lookup("z<5"))
    assert j not in (cs.lookup("x<7"), cs.lookup("z<5"))


def test_bounds_rejects_bad_input():
    with pytest.raises(LoadError):
        bounds_lattice([("x", range(0))], ["x<1"])
    with pytest.raises(LoadError):
        bounds_lattice([("x", range(3))], ["w<1"])


def test_leq_extremes():
    cs = running_lattice()
    for c in cs.elements:
        assert cs.leq(cs.true, c)
        assert cs.leq(c, cs.false)
        assert cs.lub(c, c) == c
        assert cs.lub(cs.true, c) == c


# ---------------------------------------------------------------- table

def diamond():
    return table_lattice(["a", "b", "c", "top"],
                         [("a", "top"), ("b", "top"), ("c", "top")])


def test_table_diamond_join():
    cs = diamond()
    assert cs.lub(cs.lookup("a"), cs.lookup("b")) == cs.lookup("top")
    assert cs.check_laws() == []


def test_table_checks_declared_lub():
    with pytest.raises(LoadError):
        table_lattice(["a", "b", "top"], [("a", "top"), ("b", "top")], [("a", "b", "a")])
    ok = table_lattice(["a", "b", "top"], [("a", "top"), ("b", "top")], [("a", "b", "top")])
    assert ok.lub(ok.lookup("a"), ok.lookup("b")) == ok.lookup("top")


def test_table_rejects_missing_join():
    # a and b have two incomparable upper bounds and no least one
    with pytest.raises(LoadError):
        table_lattice(["a", "b", "u", "v"], [("a", "u"), ("b", "u"), ("a", "v"), ("b", "v")])


def test_table_rejects_cycle():
    with pytest.raises(LoadError):
        table_lattice(["a", "b"], [("a", "b"), ("b", "a")])


# ---------------------------------------------------------------- enablers

def test_minimal_enablers_examples():
    cs = running_lattice()
    x7, z5 = cs.lookup("x<7"), cs.lookup("z<5")
    assert cs.minimal_enablers(x7, cs.true) == (x7,)
    assert cs.minimal_enablers(x7, z5) == (x7,)
    assert cs.minimal_enablers(x7, cs.lookup("x<5")) == (cs.true,)


def test_minimal_enablers_can_branch():
    cs = diamond()
    a, b, c, top = (cs.lookup(n) for n in ("a", "b", "c", "top"))
    assert set(cs.minimal_enablers(top, a)) == {b, c}


def brute_enablers(cs, c, d):
    ok = [a for a in cs.elements if cs.leq(c, cs.lub(d, a))]
    return {a for a in ok if not any(b != a and cs.leq(b, a) for b in ok)}


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_minimal_enablers_match_enumeration(rng):
    cs = random_table_lattice(rng)
    for c in cs.elements:
        for d in cs.elements:
            assert set(cs.minimal_enablers(c, d)) == brute_enablers(cs, c, d)
            sols = cs.lub_solutions(c, d)
            assert set(sols) == {e for e in cs.elements if cs.lub(c, e) == d}


# ---------------------------------------------------------------- laws

@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_random_table_lattices_satisfy_laws(rng):
    cs = random_table_lattice(rng, ground=5, max_size=64)
    assert len(cs) <= 64
    assert cs.check_laws() == []


@pytest.mark.parametrize("atoms", [["a"], ["a", "b"], ["a", "b", "c"], list("abcde")])
def test_atoms_laws(atoms):
    assert atoms_lattice(atoms).check_laws() == []


def test_bounds_laws():
    assert running_lattice().check_laws() == []


def test_raw_constructor_rejects_bad_lub():
    from ccpequiv import ConstraintSystem
    leq = [[True, True, True], [False, True, True], [False, False, True]]
    good = [[0, 1, 2], [1, 1, 2], [2, 2, 2]]
    assert ConstraintSystem(["bot", "mid", "top"], leq, good).check_laws() == []
    bad = [[0, 2, 2], [2, 1, 2], [2, 2, 2]]  # lub(bot, mid) should be mid
    with pytest.raises(LoadError, match="not least"):
        ConstraintSystem(["bot", "mid", "top"], leq, bad)
    with pytest.raises(LoadError):
        ConstraintSystem(["a", "b"], [[True, False], [False, True]], [[0, 1], [1, 1]])
