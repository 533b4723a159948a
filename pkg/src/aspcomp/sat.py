"""A small DPLL SAT solver with two watched literals.

The branching rule is fixed (lowest-index unassigned variable, positive
polarity first) and there are no restarts or clause learning, so runs
are reproducible and model enumeration yields a deterministic order.
Enumeration blocks each found model with a clause over the projection
variables only, so definitional auxiliaries never cause duplicates.

A solver instance is single-owner: one search at a time.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator, Sequence

from .cnf import ClauseSet

Assignment = dict[int, bool]


@dataclass
class SolveStats:
    decisions: int = 0
    propagations: int = 0
    conflicts: int = 0
    elapsed: float = 0.0


def _widx(lit: int) -> int:
    return 2 * lit if lit > 0 else -2 * lit + 1


class Solver:
    def __init__(self, clause_set: ClauseSet):
        self.num_vars = clause_set.num_vars
        self.clauses: list[list[int]] = []
        self.watches: list[list[int]] = [[] for _ in range(2 * self.num_vars + 2)]
        self.units: list[int] = []
        self.value = [0] * (self.num_vars + 1)  # 0 unknown, 1 true, -1 false
        self.trail: list[int] = []
        self.decisions: list[tuple[int, int, bool]] = []  # (trail idx, var, flipped)
        self.qhead = 0
        self.empty_clause = False
        self.stats = SolveStats()
        for cl in clause_set.clauses:
            self.add_clause(cl)

    def add_clause(self, lits: Sequence[int]) -> None:
        """Clauses may be added between models during enumeration."""
        cl = list(lits)
        if not cl:
            self.empty_clause = True
            return
        if len(cl) == 1:
            self.units.append(cl[0])
            return
        ci = len(self.clauses)
        self.clauses.append(cl)
        self.watches[_widx(cl[0])].append(ci)
        self.watches[_widx(cl[1])].append(ci)

    def _lit_value(self, lit: int) -> int:
        v = self.value[lit if lit > 0 else -lit]
        return v if lit > 0 else -v

    def _enqueue(self, lit: int) -> bool:
        v = self._lit_value(lit)
        if v == 1:
            return True
        if v == -1:
            return False
        self.value[abs(lit)] = 1 if lit > 0 else -1
        self.trail.append(lit)
        return True

    def _propagate(self) -> bool:
        while self.qhead < len(self.trail):
            lit = self.trail[self.qhead]
            self.qhead += 1
            falsified = -lit
            wl = self.watches[_widx(falsified)]
            i = j = 0
            n = len(wl)
            conflict = False
            while i < n:
                ci = wl[i]
                i += 1
                cl = self.clauses[ci]
                if cl[0] == falsified:
                    cl[0], cl[1] = cl[1], cl[0]
                first = cl[0]
                if self._lit_value(first) == 1:
                    wl[j] = ci
                    j += 1
                    continue
                for k in range(2, len(cl)):
                    if self._lit_value(cl[k]) != -1:
                        cl[1], cl[k] = cl[k], cl[1]
                        self.watches[_widx(cl[1])].append(ci)
                        break
                else:
                    wl[j] = ci
                    j += 1
                    if not self._enqueue(first):
                        conflict = True
                        break
                    self.stats.propagations += 1
            if conflict:
                while i < n:  # keep the remaining watchers
                    wl[j] = wl[i]
                    j += 1
                    i += 1
                del wl[j:]
                return False
            del wl[j:]
        return True

    def _backtrack(self) -> bool:
        """Undo to the most recent unflipped decision and flip it."""
        while self.decisions:
            mark, var, flipped = self.decisions.pop()
            for lit in reversed(self.trail[mark:]):
                self.value[abs(lit)] = 0
            del self.trail[mark:]
            self.qhead = mark
            if not flipped:
                self.decisions.append((mark, var, True))
                self._enqueue(-var)
                return True
        return False

    def _restart(self) -> bool:
        for lit in self.trail:
            self.value[abs(lit)] = 0
        self.trail.clear()
        self.decisions.clear()
        self.qhead = 0
        if self.empty_clause:
            return False
        return all(self._enqueue(u) for u in self.units)

    def next_model(self) -> Assignment | None:
        """Search from scratch; previously added blocking clauses apply."""
        start = time.perf_counter()
        try:
            if not self._restart():
                return None
            while True:
                if self._propagate():
                    var = self._next_unassigned()
                    if var == 0:
                        return {v: self.value[v] == 1 for v in range(1, self.num_vars + 1)}
                    self.stats.decisions += 1
                    self.decisions.append((len(self.trail), var, False))
                    self._enqueue(var)  # positive polarity first
                else:
                    self.stats.conflicts += 1
                    if not self._backtrack():
                        return None
        finally:
            self.stats.elapsed += time.perf_counter() - start

    def _next_unassigned(self) -> int:
        value = self.value
        for v in range(1, self.num_vars + 1):
            if value[v] == 0:
                return v
        return 0

    def models(
        self, projection: Sequence[int] | None = None, limit: int | None = None
    ) -> Iterator[Assignment]:
        """Yield assignments restricted to the projection variables, each
        distinct, in deterministic order."""
        proj = sorted(projection) if projection is not None else list(
            range(1, self.num_vars + 1)
        )
        count = 0
        while limit is None or count < limit:
            model = self.next_model()
            if model is None:
                return
            yield {v: model[v] for v in proj}
            self.add_clause([-v if model[v] else v for v in proj])
            count += 1


def solve(clause_set: ClauseSet) -> tuple[Assignment | None, SolveStats]:
    """One model (or None if unsatisfiable) plus search statistics."""
    solver = Solver(clause_set)
    model = solver.next_model()
    return model, solver.stats


def enumerate_models(
    clause_set: ClauseSet,
    projection: Sequence[int] | None = None,
    limit: int | None = None,
) -> list[Assignment]:
    """All (or the first `limit`) distinct projections of the models."""
    return list(Solver(clause_set).models(projection, limit))
