import random

import pytest

from aspcomp import Atom, Literal, ParseError, Program, Rule, parse_literal, \
    parse_program, render_program
from aspcomp.syntax import is_consistent, pos_literals

from randprog import random_program


def lit(text):
    return parse_literal(text)


def test_atom_rendering():
    assert str(Atom("p")) == "p"
    assert str(Atom("p", ("a", 1))) == "p(a,1)"
    assert str(Atom("on", ("a", "table", 0))) == "on(a,table,0)"


def test_literal_rendering_and_complement():
    p = Literal(Atom("p"))
    assert str(p) == "p"
    assert str(p.complement()) == "-p"
    assert p.complement().complement() == p
    assert p != p.complement()


def test_rule_rendering():
    prog = parse_program("p(a) :- q, not r, not -s.\nfact.\n:- p(a), not q.\n")
    texts = [str(r) for r in prog]
    assert texts == [
        "p(a) :- q, not r, not -s.",
        "fact.",
        ":- p(a), not q.",
    ]
    assert prog.rules[1].is_fact
    assert prog.rules[2].is_constraint
    assert not prog.rules[0].is_fact and not prog.rules[0].is_constraint


def test_rule_sets():
    r = parse_program("h :- a, b, not c.").rules[0]
    assert r.pos_set == {lit("a"), lit("b")}
    assert r.neg_set == {lit("c")}
    assert list(r.literals()) == [lit("h"), lit("a"), lit("b"), lit("c")]


def test_parse_round_trip():
    text = "p :- not q.\nq :- not p.\np :- p, r.\n"
    prog = parse_program(text)
    assert render_program(prog) == text
    assert parse_program(render_program(prog)) == prog


def test_atom_order_is_first_occurrence():
    prog = parse_program("b :- c, not a.\na.\nd :- b.\n")
    assert [str(x) for x in prog.atoms()] == ["b", "c", "a", "d"]
    assert [str(x) for x in prog.head_literals()] == ["b", "a", "d"]


def test_pos_literals():
    prog = parse_program("p :- not q.\nq :- not p.\nr :- r.\np :- r.\n")
    assert pos_literals(prog) == {lit("r")}
    assert pos_literals(parse_program("p :- q, not r.\n:- s.")) == {lit("q"), lit("s")}


def test_is_consistent():
    assert is_consistent({lit("p"), lit("q")})
    assert is_consistent({lit("p"), lit("-q")})
    assert not is_consistent({lit("p"), lit("-p")})
    assert is_consistent(frozenset())


def test_arguments_parse_types():
    a = parse_literal("p(x,10,table)").atom
    assert a.args == ("x", 10, "table")
    assert parse_literal("p(0)").atom.args == (0,)


def test_comments_and_whitespace():
    prog = parse_program("% leading comment\np. % trailing\n\n  q :- p.\n")
    assert len(prog) == 2
    assert str(prog.rules[1]) == "q :- p."


def test_classical_negation_forms():
    r = parse_program("-p(a) :- q, not -r.").rules[0]
    assert r.head == lit("-p(a)")
    assert r.neg_set == {lit("-r")}
    prog = parse_program("-p.\n")
    assert prog.has_classical_negation()
    assert not parse_program("p.\n").has_classical_negation()


def test_parse_error_positions():
    with pytest.raises(ParseError) as e:
        parse_program("p :- q\nr.")
    assert "line 2" in str(e.value)
    with pytest.raises(ParseError, match=r"line 1, column 3: .*variable 'X'"):
        parse_program("p(X).")
    with pytest.raises(ParseError, match="cannot be nested"):
        parse_program("p :- not not q.")
    with pytest.raises(ParseError, match="only allowed in schematic rules"):
        parse_program("p :- q, a = b.")
    with pytest.raises(ParseError, match="unexpected character"):
        parse_program("p ? q.")
    with pytest.raises(ParseError):
        parse_program(":- .")
    with pytest.raises(ParseError):
        parse_program("p(.")


def test_parse_literal_rejects_trailing_input():
    with pytest.raises(ParseError, match="trailing input"):
        parse_literal("p q")
    with pytest.raises(ParseError):
        parse_literal("")


def test_constraint_requires_body():
    prog = parse_program(":- not p.")
    assert prog.rules[0].is_constraint
    assert prog.rules[0].neg_set == {lit("p")}


def test_program_container_protocol():
    prog = parse_program("a.\nb :- a.")
    assert len(prog) == 2
    assert [r.head for r in prog] == [lit("a"), lit("b")]


def test_duplicate_rules_are_kept():
    prog = parse_program("p :- q.\np :- q.\n")
    assert len(prog) == 2


def test_random_programs_round_trip():
    rng = random.Random(20240817)
    for _ in range(200):
        prog = random_program(rng, classical=rng.random() < 0.5)
        assert parse_program(render_program(prog)) == prog


def test_rule_value_semantics():
    a = parse_program("p :- q, not r.").rules[0]
    b = parse_program("p :- q, not r.").rules[0]
    assert a == b
    assert hash(a) == hash(b)
    assert Program((a,)) == Program((b,))
