"""Lexer/parser unit tests and pretty-printer round trips."""

import pytest

from clockwork.imp import (
    And,
    Bc,
    If,
    Less,
    N,
    Not,
    Plus,
    Seq,
    Set,
    Skip,
    V,
    While,
    pretty,
)
from clockwork.parser import ParseError, parse_aexp, parse_bexp, parse_com
from clockwork.testkit import GenConfig, SplitMix64, gen_com

LOOP_SRC = "x := 1 ; WHILE x < 3 DO x := x + 1 OD"
LOOP_AST = Seq(
    Set("x", N(1)),
    While(Less(V("x"), N(3)), Set("x", Plus(V("x"), N(1)))),
)


def test_parse_skip():
    assert parse_com("SKIP") == Skip()


def test_parse_loop_example():
    assert parse_com(LOOP_SRC) == LOOP_AST


def test_parse_truncated_assignment():
    with pytest.raises(ParseError) as exc:
        parse_com("x :=")
    err = exc.value
    assert err.position == (1, 5)
    assert "arithmetic expression" in err.message
    assert err.expected


def test_parse_aexp_left_assoc():
    assert parse_aexp("1 + 2 + x") == Plus(Plus(N(1), N(2)), V("x"))


def test_parse_aexp_parens_and_negative():
    assert parse_aexp("(x)") == V("x")
    assert parse_aexp("-3") == N(-3)
    assert parse_aexp("1 + -3") == Plus(N(1), N(-3))


def test_parse_bexp_shapes():
    assert parse_bexp("true") == Bc(True)
    assert parse_bexp("! false") == Not(Bc(False))
    assert parse_bexp("x < 3 && true") == And(Less(V("x"), N(3)), Bc(True))
    # '&&' is right-associative
    assert parse_bexp("true && false && true") == And(Bc(True), And(Bc(False), Bc(True)))
    # '(' may open a comparison operand or a boolean group
    assert parse_bexp("(x) < 3") == Less(V("x"), N(3))
    assert parse_bexp("(x < 3)") == Less(V("x"), N(3))
    assert parse_bexp("(x + 1) < y") == Less(Plus(V("x"), N(1)), V("y"))
    assert parse_bexp("((x < 3))") == Less(V("x"), N(3))
    assert parse_bexp("! (x < 3 && true)") == Not(And(Less(V("x"), N(3)), Bc(True)))


def test_parse_if_and_grouping():
    assert parse_com("IF x < 0 THEN x := 1 ELSE SKIP FI") == If(
        Less(V("x"), N(0)), Set("x", N(1)), Skip()
    )
    assert parse_com("(SKIP ; SKIP) ; SKIP") == Seq(Seq(Skip(), Skip()), Skip())
    # ';' is right-associative without parens
    assert parse_com("SKIP ; SKIP ; SKIP") == Seq(Skip(), Seq(Skip(), Skip()))


def test_keywords_are_reserved():
    for bad in ("SKIP := 1", "true := 1", "WHILE := 2"):
        with pytest.raises(ParseError):
            parse_com(bad)
    # lowercase 'skip' is an ordinary identifier
    assert parse_com("skip := 1") == Set("skip", N(1))


def test_comments_and_whitespace():
    src = """
    -- initialize
    x := 1 ;   -- then loop
    WHILE x < 3 DO
        x := x + 1
    OD -- trailing comment"""
    assert parse_com(src) == LOOP_AST


def test_whitespace_insensitivity():
    squashed = "x := 1;WHILE x < 3 DO x := x+1 OD"
    spread = "x  :=\n1 ;\n\tWHILE x\n< 3 DO x := x + 1\nOD\n"
    assert parse_com(squashed) == parse_com(spread) == LOOP_AST


def test_determinism():
    assert parse_com(LOOP_SRC) == parse_com(LOOP_SRC)
    positions = []
    for _ in range(2):
        with pytest.raises(ParseError) as exc:
            parse_com("WHILE x < DO SKIP OD")
        positions.append(exc.value.position)
    assert positions[0] == positions[1]


def test_full_input_required():
    with pytest.raises(ParseError):
        parse_com("SKIP SKIP")
    with pytest.raises(ParseError):
        parse_aexp("1 + 2 x")


def test_lex_errors():
    with pytest.raises(ParseError) as exc:
        parse_com("x := 1 ? 2")
    assert "unexpected character" in exc.value.message
    with pytest.raises(ParseError):
        parse_aexp("1 - 2")  # no binary minus; '-' only prefixes literals


def test_error_is_exception_not_exit():
    # a parse failure must never kill the process
    try:
        parse_com("IF x THEN SKIP ELSE SKIP FI")
    except ParseError:
        pass


def test_roundtrip_nasty_cases():
    cases = [
        Seq(Seq(Skip(), Set("x", N(-1))), Skip()),
        If(Not(And(Bc(True), Less(V("x"), N(0)))), Skip(), Skip()),
        While(And(Bc(False), And(Bc(True), Bc(False))), Seq(Skip(), Skip())),
        Set("x", Plus(N(-3), Plus(V("y"), N(0)))),
        If(Less(Plus(V("x"), V("y")), N(-4)), Seq(Skip(), Skip()), While(Bc(False), Skip())),
    ]
    for c in cases:
        assert parse_com(pretty(c)) == c


def test_roundtrip_generated_sample():
    for seed in range(300):
        c = gen_com(GenConfig(seed=seed), 12)
        assert parse_com(pretty(c)) == c


def test_roundtrip_survives_random_whitespace():
    rng = SplitMix64(2024)
    ws = (" ", "  ", "\n", "\t", "\n  ", " -- c\n")
    for seed in range(60):
        c = gen_com(GenConfig(seed=seed), 10)
        # Re-join the token stream of the pretty form with random whitespace.
        tokens = pretty(c).split(" ")
        text = ws[rng.below(len(ws))].join(tokens) if tokens else ""
        assert parse_com(text) == c
