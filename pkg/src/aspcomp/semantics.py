"""Stable-model semantics for ground programs with classical negation.

The reduct of a program relative to a literal set x drops every rule
whose negative body meets x and erases negation from the remaining
rules.  x is an answer set iff it is consistent and is exactly the least
set closed under its own reduct, with every reduct constraint satisfied.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .syntax import Interpretation, Literal, Program, Rule, is_consistent

# A reduct is an ordinary Program that happens to contain no negation as
# failure.
ReductProgram = Program


@dataclass(frozen=True)
class Inconsistent:
    """Fixpoint report: a literal was derived together with its complement."""

    literal: Literal

    def __str__(self) -> str:
        return "inconsistent: derived both %s and %s" % (
            self.literal,
            self.literal.complement(),
        )


class BruteForceBoundError(ValueError):
    pass


def reduct(program: Program, x: frozenset[Literal]) -> ReductProgram:
    """Rules not blocked by x, with their negative bodies erased."""
    kept = []
    for r in program:
        if x and not r.neg_set.isdisjoint(x):
            continue
        kept.append(Rule(r.head, r.pos_body) if r.neg_body else r)
    return Program(tuple(kept))


def _fixpoint(rules: list[Rule]) -> tuple[set[Literal], Literal | None]:
    """Least set closed under negation-free non-constraint rules.

    Returns the derived set and the first literal derived alongside its
    complement, if any.
    """
    derived: set[Literal] = set()
    conflict: Literal | None = None
    # count undetermined positive-body literals per rule; index them
    remaining: list[int] = []
    by_body: dict[Literal, list[int]] = {}
    queue: deque[Literal] = deque()

    def derive(lit: Literal) -> None:
        nonlocal conflict
        if lit in derived:
            return
        derived.add(lit)
        if conflict is None and lit.complement() in derived:
            conflict = lit
        queue.append(lit)

    material = [r for r in rules if r.head is not None]
    for i, r in enumerate(material):
        body = r.pos_set
        remaining.append(len(body))
        for lit in body:
            by_body.setdefault(lit, []).append(i)
        if not body:
            derive(r.head)
    while queue:
        lit = queue.popleft()
        for i in by_body.get(lit, ()):
            remaining[i] -= 1
            if remaining[i] == 0:
                derive(material[i].head)
    return derived, conflict


def least_closed_set(program: ReductProgram) -> Interpretation | Inconsistent:
    """Least closed set of a negation-free program; constraints are ignored
    during generation.  Reports the first complementary pair if one is
    derived."""
    for r in program:
        if r.neg_body:
            raise ValueError("least_closed_set requires a negation-free program")
    derived, conflict = _fixpoint(list(program))
    if conflict is not None:
        return Inconsistent(conflict)
    return frozenset(derived)


def is_closed(program: Program, x: frozenset[Literal]) -> bool:
    """Every applicable rule has its head in x; applicable constraints fail."""
    for r in program:
        if r.pos_set <= x and r.neg_set.isdisjoint(x):
            if r.head is None or r.head not in x:
                return False
    return True


def is_supported(program: Program, x: frozenset[Literal]) -> bool:
    """Every member of x heads some rule whose whole body holds in x."""
    for lit in x:
        if not any(
            r.head == lit and r.pos_set <= x and r.neg_set.isdisjoint(x)
            for r in program
        ):
            return False
    return True


def is_answer_set(program: Program, x: frozenset[Literal]) -> bool:
    """x is consistent, reproduces itself as the least closed set of its
    reduct, and satisfies every reduct constraint."""
    if not is_consistent(x):
        return False
    derived: set[Literal] = set()
    remaining: list[int] = []
    heads: list[Literal] = []
    by_body: dict[Literal, list[int]] = {}
    queue: deque[Literal] = deque()
    for r in program:
        if not r.neg_set.isdisjoint(x):
            continue
        if r.head is None:
            if r.pos_set <= x:
                return False
            continue
        body = r.pos_set
        i = len(heads)
        heads.append(r.head)
        remaining.append(len(body))
        for lit in body:
            by_body.setdefault(lit, []).append(i)
        if not body:
            queue.append(r.head)
    # least closed set of the reduct, bailing out as soon as it leaves x
    while queue:
        lit = queue.popleft()
        if lit in derived:
            continue
        if lit not in x:
            return False
        derived.add(lit)
        for i in by_body.get(lit, ()):
            remaining[i] -= 1
            if remaining[i] == 0:
                queue.append(heads[i])
    return len(derived) == len(x)


def enumerate_answer_sets_bruteforce(
    program: Program, bound: int = 20
) -> list[frozenset[Literal]]:
    """All answer sets, by exhaustive candidate enumeration.

    Every answer set consists of head literals, contains every fact head,
    and is contained in the least closed set of the fully negation-erased
    program (erasing negation only adds rules to any reduct, and least
    closed sets grow with the rule set).  Candidates therefore range over
    subsets of that upper closure, facts forced in; the bound caps the
    number of free candidate literals.
    """
    heads = program.head_literals()
    upper, _ = _fixpoint([Rule(r.head, r.pos_body) for r in program])
    required = {r.head for r in program if r.is_fact}
    free = [h for h in heads if h in upper and h not in required]
    if len(free) > bound:
        raise BruteForceBoundError(
            "brute-force enumeration over %d free literals exceeds the bound of %d"
            % (len(free), bound)
        )
    if not all(h in upper for h in required):  # pragma: no cover - facts are heads
        return []
    base = frozenset(required)
    if not is_consistent(base):
        return []
    found = []
    for mask in range(1 << len(free)):
        x = base | {free[i] for i in range(len(free)) if mask >> i & 1}
        if is_consistent(x) and is_answer_set(program, x):
            found.append(x)
    return found
