import pytest

from ccpequiv import LtsKind, Transition, labeled_steps, reachable, saturate_lub, saturate_milner
from ccpequiv.properties import closure_agreement
from ccpequiv.saturation import completeness_violations, saturate, soundness_violations

from conftest import instance_family


def plain(spec, *configs):
    return reachable([spec.config(c) for c in configs], labeled_steps, spec.cs)


def edge(spec, src, label, dst):
    return Transition(spec.config(src), spec.cs.parse(label), spec.config(dst))


def test_milner_lacks_the_joined_label(fig2):
    sat = saturate_milner(plain(fig2, "A"))
    ab = fig2.cs.parse("alpha & beta")
    assert not any(t.label == ab for t in sat.transitions)
    assert {fig2.cs.name(t.label) for t in sat.transitions} == {"true", "alpha", "beta"}


def test_lub_adds_the_joined_label(fig2):
    sat = saturate_lub(plain(fig2, "A"))
    assert edge(fig2, "A", "alpha & beta", "<stop, alpha & beta>") in sat.transition_set


def test_fig4_composed_edges(fig4):
    composed = [
        edge(fig4, "P", "alpha", "<tell(d), alpha>"),
        edge(fig4, "P", "alpha", "<stop, alpha & d>"),
        edge(fig4, "<P', alpha>", "true", "<stop, alpha & d>"),
        edge(fig4, "<P', alpha>", "beta", "<stop, alpha & beta & c>"),
    ]
    for saturator in (saturate_milner, saturate_lub):
        sat = saturator(plain(fig4, "P", "Q"))
        for t in composed:
            assert t in sat.transition_set
        assert edge(fig4, "Q", "alpha & beta", "<stop, alpha & beta & c>") in sat.transition_set
    # only the lub closure lets P itself move under alpha & beta
    lub = saturate_lub(plain(fig4, "P"))
    assert edge(fig4, "P", "alpha & beta", "<tell(c), alpha & beta>") in lub.transition_set
    milner = saturate_milner(plain(fig4, "P"))
    assert not any(t.label == fig4.cs.parse("alpha & beta") for t in milner.transitions)


def test_self_loops_and_states(fig4):
    base = plain(fig4, "Q")
    for saturator in (saturate_milner, saturate_lub):
        sat = saturator(base)
        assert sat.states == base.states
        for g in sat.states:
            assert Transition(g, fig4.cs.true, g) in sat.transition_set


def test_single_state_gets_only_its_self_loop(fig4):
    sat = saturate_milner(plain(fig4, "<stop, true>"))
    assert len(sat.transitions) == 1


def test_milner_composes_silent_prefix(fig4):
    sat = saturate_milner(plain(fig4, "<ask(true) -> ask(alpha) -> stop, true>"))
    assert edge(fig4, "<ask(true) -> ask(alpha) -> stop, true>", "alpha", "<stop, alpha>") \
        in sat.transition_set


@pytest.mark.parametrize("kind", [LtsKind.MILNER, LtsKind.LUB])
def test_idempotent(fig4, kind):
    once = saturate(plain(fig4, "P", "Q"), kind)
    twice = saturate(once, kind)
    assert once.transition_set == twice.transition_set
    assert twice.kind is kind


def test_mixing_kinds_is_rejected(fig4):
    with pytest.raises(ValueError):
        saturate_lub(saturate_milner(plain(fig4, "P")))


def test_lub_closed_under_composition(fig4):
    sat = saturate_lub(plain(fig4, "P", "Q"))
    cs = fig4.cs
    for t in sat.transitions:
        for u in sat.successors[t.target]:
            assert Transition(t.source, cs.lub(t.label, u.label), u.target) in sat.transition_set


def test_milner_incomplete_on_fig2(fig2):
    milner = saturate_milner(plain(fig2, "A"))
    assert completeness_violations(milner)
    assert soundness_violations(milner) == []
    lub = saturate_lub(plain(fig2, "A"))
    assert completeness_violations(lub) == []
    assert soundness_violations(lub) == []


@pytest.mark.parametrize("seed", range(3))
def test_lub_laws_on_random_programs(seed):
    for cs, g in instance_family(40, 100 + seed):
        sat = saturate_lub(reachable([g], labeled_steps, cs))
        assert closure_agreement(sat) == []
        assert soundness_violations(sat) == []
        assert completeness_violations(sat) == []
