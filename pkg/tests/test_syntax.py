import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccpequiv import (Ask, Configuration, ParseError, Par, Stop, Sum, Tell, atoms_lattice,
                      parse_config, parse_term, show)
from ccpequiv.randomgen import random_lattice, random_process
from ccpequiv.syntax import expand_definitions, show_config, size


def test_ask_with_parenthesised_body(running):
    cs = running.cs
    p = parse_term("ask(x<7) -> (tell(true))", {}, cs)
    assert p == Ask(cs.lookup("x<7"), Tell(cs.true))


def test_stop_and_names(running):
    cs, env = running.cs, running.definitions
    assert parse_term("stop", {}, cs) == Stop()
    assert parse_term("P + Q", env, cs) == Sum(env["P"], env["Q"])


def test_definitions_expand_fully(running):
    env = running.definitions
    assert env["S"] == Ask(running.cs.lookup("z<7"), env["P"])
    assert env["R'"] == Ask(running.cs.lookup("z<5"), Sum(env["P"], env["Q'"]))


def test_configs(running):
    cs, env = running.cs, running.definitions
    assert parse_config("<P + Q, true>", env, cs) == Configuration(Sum(env["P"], env["Q"]), cs.true)
    assert parse_config("<stop, false>", env, cs) == Configuration(Stop(), cs.false)
    assert parse_config("<R' + S, true>", env, cs) == running.configs["R'S"]
    assert parse_config("stop", env, cs).store == cs.true


def test_precedence_and_associativity():
    cs = atoms_lattice(["a", "b"])
    a, b = cs.lookup("a"), cs.lookup("b")
    assert parse_term("tell(a) + tell(b) || stop", {}, cs) == Sum(Tell(a), Par(Tell(b), Stop()))
    # the ask body is atomic, so the sum is outside it
    assert parse_term("ask(a) -> stop + stop", {}, cs) == Sum(Ask(a, Stop()), Stop())
    assert parse_term("tell(a & b)", {}, cs) == Tell(cs.lub(a, b))


@pytest.mark.parametrize("text", ["ask(a) -> ", "tell(q)", "P", "ask(a) tell(a)", "stop ||",
                                  "(stop", "stop stop", "tell()"])
def test_syntax_errors_carry_position(text):
    cs = atoms_lattice(["a"])
    with pytest.raises(ParseError) as info:
        parse_term(text, {}, cs)
    assert info.value.pos is not None


def test_cyclic_definitions_rejected():
    cs = atoms_lattice(["a"])
    with pytest.raises(ParseError, match="cyclic"):
        expand_definitions({"P": "Q + stop", "Q": "ask(a) -> P"}, cs)


def test_definition_order_is_irrelevant():
    cs = atoms_lattice(["a"])
    env = expand_definitions({"B": "ask(a) -> A", "A": "tell(a)"}, cs)
    assert env["B"] == Ask(cs.lookup("a"), Tell(cs.lookup("a")))


@settings(max_examples=200, deadline=None)
@given(st.randoms(use_true_random=False), st.integers(1, 9))
def test_show_parse_round_trip(rng, nodes):
    cs = random_lattice(rng)
    p = random_process(rng, cs, nodes)
    assert size(p) == nodes
    assert parse_term(show(p, cs), {}, cs) == p
    g = Configuration(p, rng.choice(list(cs.elements)))
    assert parse_config(show_config(g, cs), {}, cs) == g
