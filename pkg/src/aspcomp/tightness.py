"""Tightness of a program on an interpretation.

A program is tight on a literal set x when some level mapping with
domain x strictly increases from the positive body into the head across
every rule whose head and positive body lie inside x.  Such a mapping
exists iff the positive dependency graph restricted to x is acyclic, so
the check is a topological sort: on success the longest-path depth is
returned as the mapping, on failure a concrete cycle is extracted as the
refutation witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .syntax import Interpretation, Literal, Program, is_consistent, pos_literals

LevelMapping = dict  # dict[Literal, int], domain exactly the interpretation


@dataclass(frozen=True)
class CycleWitness:
    """Vertices of a cycle in edge direction; the last links back to the
    first.  A self-loop is a single vertex."""

    literals: tuple[Literal, ...]

    def __str__(self) -> str:
        path = list(self.literals) + [self.literals[0]]
        return " -> ".join(str(lit) for lit in path)


@dataclass
class PositiveDependencyGraph:
    """Positive body -> head edges among the literals of one
    interpretation."""

    vertices: tuple[Literal, ...]
    edges: dict[Literal, tuple[Literal, ...]]  # deduplicated successor lists

    def predecessors(self) -> dict[Literal, list[Literal]]:
        pred: dict[Literal, list[Literal]] = {v: [] for v in self.vertices}
        for src, dsts in self.edges.items():
            for dst in dsts:
                pred[dst].append(src)
        return pred


def positive_dependency_graph(program: Program, x: Interpretation) -> PositiveDependencyGraph:
    """Vertices are the literals of x; each rule with head and full
    positive body inside x contributes body -> head edges.

    Vertex order is first occurrence in the program, then any remaining
    literals of x in rendering order, so traversals are deterministic.
    """
    order: dict[Literal, None] = {}
    for r in program:
        for lit in r.literals():
            if lit in x:
                order.setdefault(lit, None)
    for lit in sorted(x - set(order), key=str):
        order.setdefault(lit, None)
    succ: dict[Literal, dict[Literal, None]] = {v: {} for v in order}
    for r in program:
        if r.head is None or r.head not in x or not r.pos_set <= x:
            continue
        for lit in r.pos_body:
            succ[lit].setdefault(r.head, None)
    return PositiveDependencyGraph(
        tuple(order), {v: tuple(dsts) for v, dsts in succ.items()}
    )


def _extract_cycle(graph: PositiveDependencyGraph, stuck: set[Literal]) -> CycleWitness:
    """A cycle within the vertices left over by the topological sort.

    Every stuck vertex keeps a stuck predecessor, so walking predecessors
    from the first stuck vertex must revisit one; the revisited loop,
    reversed, follows edge direction.
    """
    pred = graph.predecessors()
    start = next(v for v in graph.vertices if v in stuck)
    seen_at: dict[Literal, int] = {}
    walk: list[Literal] = []
    v = start
    while v not in seen_at:
        seen_at[v] = len(walk)
        walk.append(v)
        v = next(p for p in pred[v] if p in stuck)
    loop = walk[seen_at[v] :]
    loop.reverse()
    # rotate so the first-occurring vertex leads, for a stable witness
    index = {lit: i for i, lit in enumerate(graph.vertices)}
    k = min(range(len(loop)), key=lambda i: index[loop[i]])
    return CycleWitness(tuple(loop[k:] + loop[:k]))


def tight_on(program: Program, x: Interpretation) -> LevelMapping | CycleWitness:
    """Level mapping (longest-path depth) if the restricted graph is
    acyclic, otherwise a cycle witness."""
    if not is_consistent(x):
        raise ValueError("tight_on requires a consistent interpretation")
    graph = positive_dependency_graph(program, x)
    indegree = {v: 0 for v in graph.vertices}
    for dsts in graph.edges.values():
        for dst in dsts:
            indegree[dst] += 1
    levels: dict[Literal, int] = {}
    ready = [v for v in graph.vertices if indegree[v] == 0]
    head = 0
    while head < len(ready):
        v = ready[head]
        head += 1
        levels.setdefault(v, 0)
        for dst in graph.edges[v]:
            if dst not in levels or levels[dst] < levels[v] + 1:
                levels[dst] = levels[v] + 1
            indegree[dst] -= 1
            if indegree[dst] == 0:
                ready.append(dst)
    if len(ready) == len(graph.vertices):
        return levels
    stuck = {v for v in graph.vertices if indegree[v] > 0}
    # levels assigned to stuck vertices before the sort stalled are garbage
    return _extract_cycle(graph, stuck)


def verify_level_mapping(program: Program, x: Interpretation, mapping: LevelMapping) -> bool:
    """Check the strict-increase condition for an externally supplied
    mapping; its domain must be exactly x."""
    if set(mapping) != set(x):
        raise ValueError("level mapping domain must equal the interpretation")
    for level in mapping.values():
        if not isinstance(level, int) or level < 0:
            raise ValueError("levels must be natural numbers")
    for r in program:
        if r.head is None or r.head not in x or not r.pos_set <= x:
            continue
        top = mapping[r.head]
        if any(mapping[lit] >= top for lit in r.pos_body):
            return False
    return True


def globally_tight(program: Program) -> bool:
    """True when the unrestricted positive dependency graph is acyclic,
    i.e. the strict-increase condition is satisfiable over all rules."""
    succ: dict[Literal, set[Literal]] = {}
    indegree: dict[Literal, int] = {}
    for r in program:
        for lit in r.literals():
            succ.setdefault(lit, set())
            indegree.setdefault(lit, 0)
        if r.head is None:
            continue
        for lit in r.pos_body:
            if r.head not in succ[lit]:
                succ[lit].add(r.head)
                indegree[r.head] += 1
    ready = [v for v, d in indegree.items() if d == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for dst in succ[v]:
            indegree[dst] -= 1
            if indegree[dst] == 0:
                ready.append(dst)
    return seen == len(succ)


def disjoint_from_pos(program: Program, x: Interpretation) -> bool:
    """True iff x avoids every literal that occurs in a positive body;
    the constant-zero mapping then certifies tightness on x."""
    return x.isdisjoint(pos_literals(program))
