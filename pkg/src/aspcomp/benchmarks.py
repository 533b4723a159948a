"""Benchmark problem generators: blocks-world planning and Hamiltonian
cycles.

The blocks-world encoding allows concurrent moves whose effects do not
conflict.  Answer sets of the generated program correspond one-to-one to
valid plans within the given horizon, and `extract_plan` reads the plan
back out of an answer set.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass

from .grounding import SchematicProgram, ground, parse_schematic_program
from .pipeline import SolveReport, find_answer_sets
from .syntax import Interpretation, ParseError, Program, parse_literal

_NAME_RE = re.compile(r"[a-z][a-z0-9_]*\Z")

BLOCKS_WORLD_RULES = """\
% Concurrent blocks-world planning.  A state is a set of on(X,Y,T)
% facts; moveop(X,Y,T) moves block X onto object Y between T and T+1.
goal :- time(T), goal(T).
:- not goal.
goal(T2) :- nextstate(T2,T1), goal(T1).

moveop(X,Y,T) :- time(T), block(X), object(Y), X != Y,
    on_something(X,T), available(Y,T),
    not covered(X,T), not covered(Y,T), not blocked_move(X,Y,T).

on(X,Y,T2) :- block(X), object(Y), nextstate(T2,T1), moveop(X,Y,T1).

on_something(X,T) :- block(X), object(Z), time(T), on(X,Z,T).

available(table,T) :- time(T).
available(X,T) :- block(X), time(T), on_something(X,T).

covered(X,T) :- block(Z), block(X), time(T), on(Z,X,T).

% Inertia: an unmoved block stays where it is.
on(X,Y,T2) :- nextstate(T2,T1), block(X), object(Y), on(X,Y,T1),
    not moving(X,T1).

moving(X,T) :- time(T), block(X), object(Y), moveop(X,Y,T).

% No moves once the goal is reached, at most one destination per block,
% no moving onto a block that is itself moving, at most one block onto
% any one block.
blocked_move(X,Y,T) :- block(X), object(Y), time(T), goal(T).
blocked_move(X,Y,T) :- time(T), block(X), object(Y), not moveop(X,Y,T).
blocked_move(X,Y,T) :- block(X), object(Y), object(Z), time(T),
    moveop(X,Z,T), Y != Z.
blocked_move(X,Y,T) :- block(X), object(Y), time(T), moving(Y,T).
blocked_move(X,Y,T) :- block(X), block(Y), block(Z), time(T),
    moveop(Z,Y,T), X != Z.

:- block(X), time(T), moveop(X,table,T), on(X,table,T).
:- nextstate(T2,T1), block(X), object(Y), moveop(X,Y,T1),
    moveop(X,table,T2).

nextstate(Y,X) :- time(X), time(Y), Y = X + 1.

object(table).
object(X) :- block(X).
"""

HAMILTONIAN_RULES = """\
%% Hamiltonian cycle: choose a set of edges that visits every vertex
%% exactly once and comes back, starting the reachability check at %(start)s.
in(U,V) :- edge(U,V), not out(U,V).
out(U,V) :- edge(U,V), not in(U,V).
:- in(U,V), in(U,W), V != W.
:- in(U,W), in(V,W), U != V.
reachable(V) :- in(%(start)s,V).
reachable(V) :- reachable(U), in(U,V).
:- vertex(U), not reachable(U).
"""


class InstanceError(ValueError):
    """A benchmark instance fails validation."""


@dataclass(frozen=True)
class BlocksInstance:
    """Blocks, a horizon, the initial on-relation and the goal
    on-relation (pairs of block and supporting object)."""

    blocks: tuple[str, ...]
    horizon: int
    initial: tuple[tuple[str, str], ...]
    goal: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class GraphInstance:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    start: str


def _check_name(name: str, what: str) -> None:
    if not _NAME_RE.match(name):
        raise InstanceError("invalid %s name %r" % (what, name))


def _validate_blocks(instance: BlocksInstance) -> None:
    if instance.horizon < 0:
        raise InstanceError("horizon must be nonnegative")
    seen = set()
    for b in instance.blocks:
        _check_name(b, "block")
        if b == "table":
            raise InstanceError("'table' cannot be used as a block name")
        if b in seen:
            raise InstanceError("duplicate block %r" % b)
        seen.add(b)
    objects = seen | {"table"}
    support: dict[str, str] = {}
    for block, obj in instance.initial:
        if block not in seen:
            raise InstanceError("invalid initial state: unknown block %r" % block)
        if obj not in objects:
            raise InstanceError("invalid initial state: unknown object %r" % obj)
        if block in support:
            raise InstanceError("invalid initial state: %r is on two objects" % block)
        support[block] = obj
    missing = [b for b in instance.blocks if b not in support]
    if missing:
        raise InstanceError(
            "invalid initial state: no position for block %r" % missing[0]
        )
    holders: dict[str, str] = {}
    for block, obj in instance.initial:
        if obj != "table":
            if obj in holders:
                raise InstanceError(
                    "invalid initial state: two blocks on %r" % obj
                )
            holders[obj] = block
    for start in instance.blocks:
        node, steps = start, 0
        while node != "table":
            node = support[node]
            steps += 1
            if steps > len(instance.blocks):
                raise InstanceError(
                    "invalid initial state: support cycle through %r" % start
                )
    for block, obj in instance.goal:
        if block not in seen:
            raise InstanceError("invalid goal: unknown block %r" % block)
        if obj not in objects:
            raise InstanceError("invalid goal: unknown object %r" % obj)
        if block == obj:
            raise InstanceError("invalid goal: %r on itself" % block)


def generate_blocks_world(instance: BlocksInstance) -> SchematicProgram:
    """Schematic program whose answer sets are the valid plans for the
    instance within its horizon."""
    _validate_blocks(instance)
    lines = []
    for t in range(instance.horizon + 1):
        lines.append("time(%d)." % t)
    for b in instance.blocks:
        lines.append("block(%s)." % b)
    for block, obj in instance.initial:
        lines.append("on(%s,%s,0)." % (block, obj))
    goal_body = "".join(", on(%s,%s,T)" % pair for pair in instance.goal)
    lines.append("goal(T) :- time(T)%s." % goal_body)
    text = "\n".join(lines) + "\n" + BLOCKS_WORLD_RULES
    return parse_schematic_program(text)


def _validate_graph(instance: GraphInstance) -> None:
    seen = set()
    for v in instance.vertices:
        _check_name(v, "vertex")
        if v in seen:
            raise InstanceError("duplicate vertex %r" % v)
        seen.add(v)
    for u, v in instance.edges:
        if u not in seen or v not in seen:
            raise InstanceError("edge (%s,%s) mentions an unknown vertex" % (u, v))
    if instance.start not in seen:
        raise InstanceError("start vertex %r is not a vertex" % instance.start)


def generate_hamiltonian(instance: GraphInstance) -> Program:
    """Ground program whose answer sets are the Hamiltonian cycles of the
    graph, read off the in/2 atoms."""
    _validate_graph(instance)
    lines = ["vertex(%s)." % v for v in instance.vertices]
    lines += ["edge(%s,%s)." % e for e in instance.edges]
    text = "\n".join(lines) + "\n" + HAMILTONIAN_RULES % {"start": instance.start}
    return ground(parse_schematic_program(text))


def parse_instance(text: str) -> BlocksInstance:
    """Blocks-world instance files: one `key: value` line each for
    blocks, horizon, init and goal; % starts a comment."""
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or key not in ("blocks", "horizon", "init", "goal"):
            raise InstanceError("line %d: expected 'blocks:', 'horizon:', "
                                "'init:' or 'goal:'" % lineno)
        if key in fields:
            raise InstanceError("line %d: duplicate %r" % (lineno, key))
        fields[key] = value.strip()
    for key in ("blocks", "horizon", "init"):
        if key not in fields:
            raise InstanceError("missing %r line" % key)
    try:
        horizon = int(fields["horizon"])
    except ValueError:
        raise InstanceError("horizon must be an integer") from None
    blocks = tuple(fields["blocks"].split())

    def on_pairs(value: str, what: str) -> tuple[tuple[str, str], ...]:
        pairs = []
        for item in value.split():
            try:
                lit = parse_literal(item)
            except ParseError as exc:
                raise InstanceError("bad %s entry %r: %s" % (what, item, exc)) from None
            if (lit.negated or lit.atom.predicate != "on"
                    or len(lit.atom.args) != 2
                    or not all(isinstance(a, str) for a in lit.atom.args)):
                raise InstanceError("bad %s entry %r: expected on(block,object)"
                                    % (what, item))
            pairs.append((lit.atom.args[0], lit.atom.args[1]))
        return tuple(pairs)

    return BlocksInstance(
        blocks=blocks,
        horizon=horizon,
        initial=on_pairs(fields["init"], "init"),
        goal=on_pairs(fields.get("goal", ""), "goal"),
    )


def chain_instance(num_blocks: int, horizon: int) -> BlocksInstance:
    """Standard family: block a sits on b, everything else on the table;
    the goal stacks all blocks into a single tower a-b-c-..."""
    if not 1 <= num_blocks <= 26:
        raise InstanceError("supported sizes are 1..26 blocks")
    blocks = tuple(chr(ord("a") + i) for i in range(num_blocks))
    if num_blocks >= 2:
        initial = ((blocks[0], blocks[1]),) + tuple(
            (b, "table") for b in blocks[1:]
        )
    else:
        initial = ((blocks[0], "table"),)
    goal = tuple((blocks[i], blocks[i + 1]) for i in range(num_blocks - 1))
    return BlocksInstance(blocks, horizon, initial, goal)


@dataclass(frozen=True)
class Plan:
    """Moves grouped by time step: (t, ((block, destination), ...))."""

    moves: tuple[tuple[int, tuple[tuple[str, str], ...]], ...]

    def __str__(self) -> str:
        if not self.moves:
            return "empty plan"
        lines = []
        for t, step in self.moves:
            what = "; ".join("move %s to %s" % m for m in step)
            lines.append("%d: %s" % (t, what))
        return "\n".join(lines)


def extract_plan(answer_set: Interpretation) -> Plan:
    """Read the plan out of a blocks-world answer set."""
    by_time: dict[int, list[tuple[str, str]]] = {}
    for lit in answer_set:
        if lit.negated or lit.atom.predicate != "moveop":
            continue
        block, obj, t = lit.atom.args
        by_time.setdefault(t, []).append((block, obj))
    return Plan(tuple(
        (t, tuple(sorted(by_time[t]))) for t in sorted(by_time)
    ))


@dataclass
class BenchRow:
    problem: str
    blocks: int
    steps: int
    search_time: float
    total_time: float
    outcome: str
    plan: Plan | None
    report: SolveReport


def run_benchmark(instance: BlocksInstance, name: str | None = None) -> BenchRow:
    """Ground the instance, search for one plan, time every phase.

    An instance only counts as unsolvable after the completion models
    have been exhausted, so the row is exact either way.
    """
    if name is None:
        name = "bw%d.%d" % (len(instance.blocks), instance.horizon)
    wall = time.perf_counter()
    schematic = generate_blocks_world(instance)
    start = time.perf_counter()
    program = ground(schematic)
    ground_time = time.perf_counter() - start
    report = find_answer_sets(program, limit=None, max_answer_sets=1)
    report.timings.ground = ground_time
    total = time.perf_counter() - wall
    if report.answer_sets:
        outcome = "plan found"
        plan = extract_plan(report.answer_sets[0])
    else:
        outcome = "unsolvable"
        plan = None
    return BenchRow(
        problem=name,
        blocks=len(instance.blocks),
        steps=instance.horizon,
        search_time=report.timings.search,
        total_time=total,
        outcome=outcome,
        plan=plan,
        report=report,
    )


def format_bench_table(rows: list[BenchRow]) -> str:
    """Fixed-width results table, one benchmark per line."""
    header = ("Problem", "Blocks", "Steps", "Search s", "Total s", "Outcome")
    body = [
        (
            row.problem,
            str(row.blocks),
            str(row.steps),
            "%.2f" % row.search_time,
            "%.2f" % row.total_time,
            row.outcome,
        )
        for row in rows
    ]
    widths = [
        max(len(header[i]), *(len(line[i]) for line in body)) if body else len(header[i])
        for i in range(len(header))
    ]
    out = []
    for line in [header] + body:
        cells = [
            line[i].ljust(widths[i]) if i in (0, 5) else line[i].rjust(widths[i])
            for i in range(len(header))
        ]
        out.append("  ".join(cells).rstrip())
    return "\n".join(out) + "\n"
