import pytest

from ccpequiv import (Configuration, LtsKind, StateCapExceeded, Stop, Tell, Transition,
                      labeled_steps, reachable, reduce, satisfies_barb, saturate_lub,
                      weak_barb_set)
from ccpequiv.equivalence import extend_for_redundancy
from ccpequiv.properties import (labeled_completeness, labeled_soundness, store_monotonicity,
                                 true_steps_are_reductions)
from ccpequiv.semantics import reduction_closure

from conftest import instance_family
from drawn import RUNNING_INITIALS, running_states, running_transitions


def test_reduce_tell(running):
    g = running.config("<T', z<5 & x<5>")
    assert reduce(g, running.cs) == {running.config("<stop, z<5 & x<5 & y=1>")}


def test_reduce_stuck(running):
    assert reduce(running.config("<stop, x<5>"), running.cs) == set()
    assert reduce(running.config("<P, z<5>"), running.cs) == set()


def test_reduce_choice_and_par(fig4):
    cs = fig4.cs
    g = fig4.config("<tell(c) || tell(d), true>")
    assert reduce(g, cs) == {fig4.config("<stop || tell(d), c>"), fig4.config("<tell(c) || stop, d>")}
    g = fig4.config("<tell(c) + tell(d), true>")
    assert reduce(g, cs) == {fig4.config("<stop, c>"), fig4.config("<stop, d>")}


def test_labeled_absorption_pair(running):
    g = running.config("<P + Q, z<5>")
    got = {(t.label, t.target) for t in labeled_steps(g, running.cs)}
    assert got == {
        (running.cs.parse("x<7"), running.config("<T, z<5 & x<7>")),
        (running.cs.parse("x<5"), running.config("<T, z<5 & x<5>")),
    }


def test_labeled_tell_and_stop(running):
    cs = running.cs
    d = cs.parse("z<7")
    [t] = labeled_steps(Configuration(Tell(cs.parse("y=1")), d), cs)
    assert t.label == cs.true and t.target == Configuration(Stop(), cs.lub(d, cs.parse("y=1")))
    assert labeled_steps(Configuration(Stop(), d), cs) == []


def test_barbs(running):
    cs = running.cs
    assert satisfies_barb(running.config("<stop, x<5>"), cs.parse("x<7"), cs)
    assert not satisfies_barb(running.config("<stop, x<7>"), cs.parse("x<5"), cs)
    g = running.config("<P, false>")
    assert all(satisfies_barb(g, e, cs) for e in cs.elements)
    assert satisfies_barb(running.config("<P, true>"), cs.true, cs)


def test_running_example_state_space(running):
    lts = reachable([running.config(n) for n in RUNNING_INITIALS], labeled_steps, running.cs)
    ext = extend_for_redundancy(lts)
    assert running_transitions(running) == set(ext.transitions)
    assert running_states(running) == set(ext.states)
    # the plain closure misses exactly the configuration needed for redundancy checks
    assert set(ext.states) - set(lts.states) == {running.config("<P, z<5>")}
    assert len({g.store for g in ext.states}) == 7


def test_fig2_plain_chain(fig2):
    lts = reachable([fig2.configs["A"]], labeled_steps, fig2.cs)
    assert len(lts.states) == 3
    assert [fig2.cs.name(t.label) for t in lts.transitions] == ["alpha", "beta"]


def test_reachable_trivial_and_cap(running):
    lts = reachable([running.config("<stop, true>")], labeled_steps, running.cs)
    assert len(lts.states) == 1 and not lts.transitions
    with pytest.raises(StateCapExceeded):
        reachable([running.configs["RS"]], labeled_steps, running.cs, cap=3)


def test_reachable_is_deterministic(running):
    a = reachable([running.configs["RS"], running.configs["S"]], labeled_steps, running.cs)
    b = reachable([running.configs["S"], running.configs["RS"]], labeled_steps, running.cs)
    assert a.states == b.states and a.transitions == b.transitions


def test_weak_barbs(fig4, running):
    cs = fig4.cs
    sat = saturate_lub(reachable([fig4.config("<tell(c), true>")], labeled_steps, cs))
    assert cs.parse("c") in weak_barb_set(fig4.config("<tell(c), true>"), sat)
    stop = fig4.config("<stop, alpha>")
    sat = saturate_lub(reachable([stop], labeled_steps, cs))
    assert weak_barb_set(stop, sat) == cs.downset(cs.parse("alpha"))
    # neither side of the running example can move without help
    rcs = running.cs
    sat = saturate_lub(reachable([running.configs["RS"], running.configs["R'S"]], labeled_steps, rcs))
    assert weak_barb_set(running.configs["RS"], sat) == {rcs.true}
    assert weak_barb_set(running.configs["R'S"], sat) == {rcs.true}
    with pytest.raises(ValueError):
        weak_barb_set(stop, reachable([stop], labeled_steps, cs))


def test_true_steps_are_exactly_reductions(running, fig4):
    for spec in (running, fig4):
        lts = reachable(list(spec.configs.values()), labeled_steps, spec.cs)
        assert lts.kind is LtsKind.PLAIN
        assert true_steps_are_reductions(lts) == []


@pytest.mark.parametrize("seed", range(4))
def test_labeled_semantics_laws_on_random_programs(seed):
    for cs, g in instance_family(50, seed):
        lts = reachable([g], labeled_steps, cs)
        assert labeled_soundness(lts) == []
        assert labeled_completeness(lts) == []
        assert true_steps_are_reductions(lts) == []
        assert store_monotonicity(lts) == []


def test_reduction_closure_includes_start(fig4):
    g = fig4.config("<tell(c), true>")
    assert reduction_closure(g, fig4.cs) == {g, fig4.config("<stop, c>")}


def test_transition_is_a_triple(fig4):
    t = Transition(fig4.config("<stop, true>"), fig4.cs.true, fig4.config("<stop, true>"))
    assert tuple(t) == (t.source, t.label, t.target)
