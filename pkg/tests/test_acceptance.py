"""End-to-end acceptance suite.

Each test checks one acceptance criterion inside a wall-clock budget and
reports a CRITERION n PASS/FAIL line through the terminal summary hook
in conftest.py.
"""

import functools
import itertools
import random
import time

from aspcomp import CycleWitness, GraphInstance, chain_instance, completion, \
    eliminate_classical_negation, enumerate_answer_sets_bruteforce, \
    eval_completion, extract_plan, find_answer_sets, format_bench_table, \
    generate_blocks_world, generate_hamiltonian, ground, is_answer_set, \
    is_closed, is_consistent, is_supported, parse_program, pos_literals, \
    read_dimacs, run_benchmark, solve, theory_atoms, tight_on, to_cnf, \
    verify_level_mapping, write_dimacs
from aspcomp.pipeline import ROUTE_REJECTED, ROUTE_TIGHT

import bw_oracle
from conftest import record_criterion
from randprog import candidate_sets, random_program


def criterion(number, description, budget):
    """Record a PASS/FAIL summary line and enforce the time budget."""
    def deco(fn):
        @functools.wraps(fn)
        def wrapper():
            start = time.perf_counter()
            try:
                fn()
            except BaseException:
                record_criterion(number, description, False,
                                 time.perf_counter() - start)
                raise
            elapsed = time.perf_counter() - start
            record_criterion(number, description, elapsed < budget, elapsed)
            assert elapsed < budget, (
                "criterion %d finished in %.2fs, budget %.0fs"
                % (number, elapsed, budget))
        return wrapper
    return deco


def names(x):
    return frozenset(str(lit) for lit in x)


@criterion(1, "self-supporting atom: only the empty set survives", 1.0)
def test_criterion_01_self_supporting_atom():
    report = find_answer_sets(parse_program("p :- p.\n"), limit=None)
    assert {names(m.literals) for m in report.models} == {
        frozenset(), frozenset({"p"})}
    assert [names(x) for x in report.answer_sets] == [frozenset()]
    rejected = [m for m in report.models if m.route == ROUTE_REJECTED]
    assert len(rejected) == 1
    assert names(rejected[0].literals) == {"p"}
    assert str(rejected[0].cycle) == "p -> p"


@criterion(2, "even negative loop: both answer sets certified at level 0", 1.0)
def test_criterion_02_even_negative_loop():
    report = find_answer_sets(parse_program("p :- not q.\nq :- not p.\n"),
                              limit=None)
    assert {names(x) for x in report.answer_sets} == {
        frozenset({"p"}), frozenset({"q"})}
    for m in report.models:
        assert m.route == ROUTE_TIGHT
        mapping = {str(lit): level for lit, level in m.level_mapping.items()}
        assert mapping in ({"p": 0}, {"q": 0})


@criterion(3, "positive loop with escape: fast path avoids the reduct", 1.0)
def test_criterion_03_positive_body_disjointness():
    prog = parse_program("p :- not q.\nq :- not p.\nr :- r.\np :- r.\n")
    assert names(pos_literals(prog)) == {"r"}
    report = find_answer_sets(prog, limit=None)
    assert {names(m.literals) for m in report.models} == {
        frozenset({"p"}), frozenset({"q"}), frozenset({"p", "r"})}
    assert {names(x) for x in report.answer_sets} == {
        frozenset({"p"}), frozenset({"q"})}
    for m in report.models:
        if m.accepted:
            assert m.route == ROUTE_TIGHT
            assert m.pos_disjoint


@criterion(4, "two self-loops: satisfiable completion, zero answer sets", 1.0)
def test_criterion_04_two_self_loops():
    graph = GraphInstance(("v0", "v1"), (("v0", "v0"), ("v1", "v1")), "v0")
    prog = generate_hamiltonian(graph)
    assert enumerate_answer_sets_bruteforce(prog, bound=20) == []
    renamed, _ = eliminate_classical_negation(prog)
    model, _ = solve(to_cnf(completion(renamed), simplify=True))
    assert model is not None
    report = find_answer_sets(prog, limit=None)
    assert report.answer_sets == []
    assert any(m.route == ROUTE_REJECTED for m in report.models)
    junk = frozenset({"vertex(v0)", "vertex(v1)", "edge(v0,v0)",
                      "edge(v1,v1)", "in(v0,v0)", "in(v1,v1)",
                      "reachable(v0)", "reachable(v1)"})
    assert junk in {names(m.literals) for m in report.models}


def closed_form_level(lit, horizon):
    """Level of a blocks-world atom in the static certificate: frame atoms
    sit at the bottom, each time step occupies a band of four levels, and
    the goal atom tops the final band."""
    predicate = lit.atom.predicate
    args = lit.atom.args
    if predicate in ("time", "block"):
        return 0
    if predicate in ("object", "nextstate"):
        return 1
    if predicate == "goal" and not args:
        return 4 * horizon + 4
    t = int(args[-1])
    return {
        "on": 4 * t + 2,
        "covered": 4 * t + 3,
        "on_something": 4 * t + 3,
        "goal": 4 * t + 3,
        "available": 4 * t + 4,
        "moveop": 4 * t + 5,
        "moving": 4 * t + 6,
        "blocked_move": 4 * t + 7,
    }[predicate]


@criterion(5, "3-block tower: closed-form levels certify every model", 30.0)
def test_criterion_05_blocks_world_level_mapping():
    for horizon in range(5):
        prog = ground(generate_blocks_world(chain_instance(3, horizon)))
        report = find_answer_sets(prog, limit=None)
        for m in report.models:
            x = m.literals
            assert not isinstance(tight_on(prog, x), CycleWitness)
            mapping = {lit: closed_form_level(lit, horizon) for lit in x}
            assert verify_level_mapping(prog, x, mapping)
            for lit in x:
                if lit.atom.predicate == "nextstate":
                    succ, step = lit.atom.args
                    assert int(succ) == int(step) + 1


@criterion(6, "3-block tower: outcomes and plans match state-space oracle", 60.0)
def test_criterion_06_planning_against_oracle():
    for horizon in range(5):
        instance = chain_instance(3, horizon)
        prog = ground(generate_blocks_world(instance))
        report = find_answer_sets(prog, limit=None)
        assert bool(report.answer_sets) == bw_oracle.solvable(instance)
        assert len(report.answer_sets) == bw_oracle.count_plans(instance)
        for x in report.answer_sets:
            assert bw_oracle.simulate_plan(instance, extract_plan(x))


@criterion(7, "1000 random programs with strong negation: tight candidates "
              "are answer sets iff closed and supported", 60.0)
def test_criterion_07_closed_supported_equivalence():
    rng = random.Random(20240811)
    tight_candidates = 0
    for _ in range(1000):
        prog = random_program(rng, max_atoms=6, max_rules=10, classical=True)
        for x in candidate_sets(prog, classical=True):
            assert is_consistent(x)
            answer = is_answer_set(prog, x)
            closed_supported = is_closed(prog, x) and is_supported(prog, x)
            if answer:
                assert closed_supported
            if not isinstance(tight_on(prog, x), CycleWitness):
                tight_candidates += 1
                assert answer == closed_supported
    assert tight_candidates >= 1000


@criterion(8, "1000 random programs: tight sets model the completion iff "
              "answer sets; pipeline equals brute force", 60.0)
def test_criterion_08_completion_equivalence():
    rng = random.Random(20240812)
    for _ in range(1000):
        prog = random_program(rng, max_atoms=6, max_rules=10)
        theory = completion(prog)
        for x in candidate_sets(prog):
            if isinstance(tight_on(prog, x), CycleWitness):
                continue
            assert is_answer_set(prog, x) == eval_completion(theory, x)
        brute = {names(x)
                 for x in enumerate_answer_sets_bruteforce(prog, bound=20)}
        report = find_answer_sets(prog, limit=None)
        assert {names(x) for x in report.answer_sets} == brute


@criterion(9, "5-block, 6-step benchmark solves end to end", 120.0)
def test_criterion_09_benchmark_scale():
    instance = chain_instance(5, 6)
    row = run_benchmark(instance)
    assert row.outcome == "plan found"
    assert bw_oracle.simulate_plan(instance, row.plan)
    assert 0 < row.search_time < row.total_time
    table = format_bench_table([row])
    header = table.splitlines()[0].split()
    assert header == ["Problem", "Blocks", "Steps", "Search", "s",
                      "Total", "s", "Outcome"]
    assert "bw5.6" in table


def theory_models(theory):
    atoms = theory_atoms(theory)
    out = set()
    for bits in itertools.product((False, True), repeat=len(atoms)):
        x = frozenset(a for a, bit in zip(atoms, bits) if bit)
        if eval_completion(theory, x):
            out.add(frozenset(str(a) for a in x))
    return out


def cnf_models_projected(clause_set):
    out = set()
    restrict = clause_set.atom_vars()
    for bits in itertools.product((False, True), repeat=clause_set.num_vars):
        value = {i + 1: bits[i] for i in range(clause_set.num_vars)}
        if all(any(value[abs(lit)] == (lit > 0) for lit in clause)
               for clause in clause_set.clauses):
            out.add(frozenset(clause_set.name_of(v)
                              for v in restrict if value[v]))
    return out


@criterion(10, "DIMACS round trip is lossless; clause conversion preserves "
               "projected models", 10.0)
def test_criterion_10_dimacs_fidelity():
    rng = random.Random(20240813)
    exhaustive_checks = 0
    for _ in range(150):
        theory = completion(random_program(rng, max_atoms=4, max_rules=6))
        expected = theory_models(theory)
        for simplify in (False, True):
            clause_set = to_cnf(theory, simplify=simplify)
            cnf_text, map_text = write_dimacs(clause_set)
            assert read_dimacs(cnf_text, map_text) == clause_set
            if clause_set.num_vars <= 10:
                exhaustive_checks += 1
                assert cnf_models_projected(clause_set) == expected
    assert exhaustive_checks >= 100
