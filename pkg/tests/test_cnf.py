import itertools
import random

import pytest

from aspcomp import ClauseSet, completion, parse_program, read_dimacs, \
    to_cnf, write_dimacs
from aspcomp.cnf import AUX_PREFIX


def check_dimacs_text(text):
    """Independent DIMACS reader: returns (num_vars, clauses) and checks
    the format invariants the writer must satisfy."""
    lines = [l for l in text.splitlines() if l and not l.startswith("c")]
    head = lines[0].split()
    assert head[:2] == ["p", "cnf"]
    num_vars, num_clauses = int(head[2]), int(head[3])
    tokens = " ".join(lines[1:]).split()
    clauses, current = [], []
    for tok in tokens:
        v = int(tok)
        if v == 0:
            clauses.append(tuple(current))
            current = []
        else:
            assert 1 <= abs(v) <= num_vars
            current.append(v)
    assert current == []  # every clause is 0-terminated
    assert len(clauses) == num_clauses
    return num_vars, clauses


def test_exact_output_for_tiny_sets():
    empty = ClauseSet([], ())
    assert write_dimacs(empty)[0] == "p cnf 0 0\n"
    one = ClauseSet([(-1,)], ("p",))
    cnf_text, map_text = write_dimacs(one)
    assert cnf_text == "p cnf 1 1\n-1 0\n"
    assert map_text == "1\tp\n"


def test_empty_clause_renders_as_bare_zero():
    cs = ClauseSet([()], ("p",))
    cnf_text, _ = write_dimacs(cs)
    assert cnf_text == "p cnf 1 1\n0\n"
    assert read_dimacs(cnf_text).clauses == [()]


def test_round_trip_exact():
    cs = ClauseSet([(1, -2), (2, 3, -1), (-3,)], ("p", "q", "r(a,0)"))
    cnf_text, map_text = write_dimacs(cs)
    again = read_dimacs(cnf_text, map_text)
    assert again == cs


def test_round_trip_random():
    rng = random.Random(20240822)
    for _ in range(100):
        n = rng.randint(0, 8)
        names = tuple("v%d" % (i + 1) for i in range(n))
        clauses = []
        for _ in range(rng.randint(0, 12)):
            width = rng.randint(0, min(3, n))
            vs = rng.sample(range(1, n + 1), width)
            clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
        cs = ClauseSet(clauses, names)
        cnf_text, map_text = write_dimacs(cs)
        assert read_dimacs(cnf_text, map_text) == cs
        num_vars, parsed = check_dimacs_text(cnf_text)
        assert num_vars == n
        assert parsed == clauses


def test_read_without_map_invents_names():
    cs = read_dimacs("p cnf 2 1\n1 -2 0\n")
    assert cs.names == ("v1", "v2")
    assert cs.clauses == [(1, -2)]


def test_read_rejects_malformed_input():
    with pytest.raises(ValueError):
        read_dimacs("cnf 1 1\n1 0\n")
    with pytest.raises(ValueError):
        read_dimacs("p cnf 1 1\n2 0\n")  # literal out of range
    with pytest.raises(ValueError):
        read_dimacs("p cnf 1 1\n1\n")  # missing terminator
    with pytest.raises(ValueError):
        read_dimacs("p cnf 1 2\n1 0\n")  # clause count mismatch
    with pytest.raises(ValueError):
        read_dimacs("p cnf 1 1\n1 0\n", "2\tp\n")  # map skips variable 1


def test_comment_lines_are_skipped():
    cs = read_dimacs("c hello\np cnf 1 1\nc again\n1 0\n")
    assert cs.clauses == [(1,)]


def test_biconditional_expansion_is_exact():
    # the bare theory { q <-> -p }, with no entry for p itself
    from aspcomp.completion import CompletionTheory
    from aspcomp.syntax import Atom
    q, p = Atom("q"), Atom("p")
    theory = CompletionTheory({q: (((p, False),),)}, ())
    cs = to_cnf(theory)
    assert cs.names == ("q", "p")
    assert cs.clauses == [(-1, -2), (1, 2)]


def test_atom_without_rules_compiles_to_negative_unit():
    cs = to_cnf(completion(parse_program("q :- not p.\n")))
    assert cs.names == ("q", "p")
    assert cs.clauses == [(-1, -2), (1, 2), (-2,)]


def test_to_cnf_unit_for_facts():
    cs = to_cnf(completion(parse_program("p.\n")))
    assert cs.names == ("p",)
    assert cs.clauses == [(1,)]


def test_aux_variables_are_marked():
    prog = parse_program("p :- q, r.\np :- s.\nq.\nr.\ns :- not t.\n")
    cs = to_cnf(completion(prog), simplify=False)
    aux = [n for n in cs.names if n.startswith(AUX_PREFIX)]
    assert len(aux) == 1  # only the two-literal body needs a definition
    assert set(cs.atom_vars()) == {
        i + 1 for i, n in enumerate(cs.names) if not n.startswith(AUX_PREFIX)}


def cnf_models(cs, restrict):
    """All models of the clauses by brute force, projected onto the
    variables in `restrict` (as frozensets of names)."""
    out = set()
    n = cs.num_vars
    for bits in itertools.product((False, True), repeat=n):
        value = {i + 1: bits[i] for i in range(n)}
        if all(any(value[abs(l)] == (l > 0) for l in clause) for clause in cs.clauses):
            out.add(frozenset(cs.name_of(v) for v in restrict if value[v]))
    return out


def test_simplify_preserves_projected_models():
    rng = random.Random(20240823)
    from randprog import random_program
    for _ in range(150):
        theory = completion(random_program(rng))
        full = to_cnf(theory, simplify=False)
        slim = to_cnf(theory, simplify=True)
        if full.num_vars > 10 or slim.num_vars > 10:
            continue
        assert cnf_models(full, full.atom_vars()) == cnf_models(slim, slim.atom_vars())


def test_unsatisfiable_theory_gets_empty_clause_when_simplifying():
    cs = to_cnf(completion(parse_program("p.\n:- p.\n")), simplify=True)
    assert () in cs.clauses
    # without simplification the conflict is left to the solver
    plain = to_cnf(completion(parse_program("p.\n:- p.\n")))
    assert plain.clauses == [(1,), (-1,)]
