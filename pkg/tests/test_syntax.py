"""Formula syntax: parsing, printing, numerals, substitution."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pilottery.errors import ParseError
from pilottery.syntax import (Add, And, Eq, Exists, Forall, Imp, Mul, Not,
                              O, Or, Succ, Var, Zero, free_vars, numeral,
                              parse_formula, substitute, succ, surface_of,
                              term_vars, word_length, word_of)


def random_term(rng, depth):
    roll = rng.random()
    if depth <= 0 or roll < 0.35:
        return rng.choice([O, Var(rng.randint(0, 3)),
                           numeral(rng.randint(0, 9))])
    if roll < 0.55:
        return succ(random_term(rng, depth - 1), rng.randint(1, 3))
    ctor = rng.choice([Add, Mul])
    return ctor(random_term(rng, depth - 1), random_term(rng, depth - 1))


def random_formula(rng, depth):
    roll = rng.random()
    if depth <= 0 or roll < 0.3:
        return Eq(random_term(rng, 2), random_term(rng, 2))
    if roll < 0.45:
        return Not(random_formula(rng, depth - 1))
    if roll < 0.75:
        ctor = rng.choice([Imp, And, Or])
        return ctor(random_formula(rng, depth - 1),
                    random_formula(rng, depth - 1))
    ctor = rng.choice([Forall, Exists])
    return ctor(rng.randint(0, 3), random_formula(rng, depth - 1))


def test_simple_atom():
    f = parse_formula("O=O")
    assert f == Eq(O, O)


def test_binder_removes_variable():
    f = parse_formula("∃x1 (x0 = x1)")
    assert free_vars(f) == frozenset((0,))


def test_surface_aliases():
    assert parse_formula("x = y") == Eq(Var(0), Var(1))
    assert parse_formula("x′ = x1") == Eq(Var(1), Var(1))


def test_numerals():
    assert numeral(0) == O
    assert word_of(numeral(3)) == "SSSO"
    assert surface_of(numeral(3)) == "3"
    assert parse_formula("3 = SSSO") == Eq(numeral(3), numeral(3))
    for n in (0, 1, 7, 100):
        assert word_length(numeral(n)) == n + 1
        assert term_vars(numeral(n)) == frozenset()


def test_succ_chain_collapse():
    assert succ(succ(Var(0), 2), 3) == Succ(Var(0), 5)
    assert succ(numeral(2), 2) == numeral(4)


def test_parse_error_has_position():
    with pytest.raises(ParseError) as err:
        parse_formula("O=")
    assert err.value.pos == 2


def test_strict_mode_rejects_redundant_parens():
    parse_formula("(O=O)")  # surface tolerates
    with pytest.raises(ParseError):
        parse_formula("(O=O)", strict=True)


def test_word_round_trip_examples():
    for text in ["O=O", "∀x0 ¬Sx0=O", "((x0 + x1) = O → O=O)",
                 "∃x1 ¬¬x1 = 40"]:
        f = parse_formula(text)
        w = word_of(f)
        assert parse_formula(w, strict=True) == f


def test_fuzz_parse_print_roundtrip():
    rng = random.Random(1234)
    for _ in range(10_000):
        f = random_formula(rng, rng.randint(0, 8))
        assert parse_formula(surface_of(f)) == f


@settings(max_examples=300, derandomize=True)
@given(st.integers(0, 10**6))
def test_numeral_word_length_property(n):
    assert word_length(numeral(n)) == n + 1


def test_word_length_agrees_with_word():
    rng = random.Random(77)
    for _ in range(300):
        f = random_formula(rng, 5)
        assert word_length(f) == len(word_of(f))


def test_substitute_basic():
    f = parse_formula("x0 = x1")
    assert substitute(f, 0, numeral(2)) == parse_formula("2 = x1")


def test_substitute_stops_at_binder():
    f = Forall(0, Eq(Var(0), Var(1)))
    assert substitute(f, 0, numeral(5)) == f


def test_substitute_avoids_capture():
    f = Forall(1, Eq(Var(0), Var(1)))
    g = substitute(f, 0, Var(1))
    # binder renamed: the substituted variable stays free
    assert isinstance(g, Forall)
    assert g.var != 1
    assert free_vars(g) == frozenset((1,))


def test_substitute_into_succ_chain():
    t = substitute(Eq(succ(Var(0), 3), O), 0, numeral(2))
    assert t == Eq(numeral(5), O)
