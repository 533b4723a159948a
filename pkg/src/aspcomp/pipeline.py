"""End-to-end answer-set search: complete, clausify, solve, certify.

Completion models are enumerated lazily from the SAT solver and each one
is certified in turn.  The cheap certificates come first: if the model
avoids every positively occurring literal the constant-zero level
mapping applies; otherwise tightness on the model is decided via the
dependency graph; only when a cycle blocks certification does the full
reduct fixpoint check decide membership.  Models failing that check are
rejected and enumeration continues.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .completion import (
    CompletionTheory,
    RenamingMap,
    completion,
    eliminate_classical_negation,
    eval_completion,
    theory_atoms,
    to_cnf,
)
from .sat import Solver, SolveStats
from .semantics import is_answer_set, is_closed, is_supported
from .syntax import Interpretation, Literal, Program, is_consistent, pos_literals
from .tightness import CycleWitness, LevelMapping, tight_on

ROUTE_TIGHT = "tightness-certified"
ROUTE_REDUCT = "reduct-verified"
ROUTE_REJECTED = "rejected"


@dataclass
class PhaseTimings:
    ground: float = 0.0
    complete: float = 0.0
    clausify: float = 0.0
    search: float = 0.0


@dataclass
class ModelReport:
    """How one completion model fared during certification."""

    literals: Interpretation
    route: str
    pos_disjoint: bool = False
    level_mapping: LevelMapping | None = None
    cycle: CycleWitness | None = None

    @property
    def accepted(self) -> bool:
        return self.route != ROUTE_REJECTED


@dataclass
class SolveReport:
    answer_sets: list[Interpretation]
    models: list[ModelReport]
    completion_models_seen: int
    stats: SolveStats
    timings: PhaseTimings


@dataclass
class CertificateReport:
    """Independent diagnostics for one candidate interpretation."""

    consistent: bool
    closed: bool
    supported: bool
    tight: bool
    level_mapping: LevelMapping | None
    cycle: CycleWitness | None
    answer_set: bool
    completion_model: bool
    internal_errors: list[str] = field(default_factory=list)


def _certify_model(
    program: Program,
    pos: frozenset[Literal],
    x: Interpretation,
    verify: bool,
) -> ModelReport:
    if x.isdisjoint(pos):
        report = ModelReport(
            x, ROUTE_TIGHT, pos_disjoint=True, level_mapping={lit: 0 for lit in x}
        )
    else:
        result = tight_on(program, x)
        if isinstance(result, CycleWitness):
            if is_answer_set(program, x):
                return ModelReport(x, ROUTE_REDUCT, cycle=result)
            return ModelReport(x, ROUTE_REJECTED, cycle=result)
        report = ModelReport(x, ROUTE_TIGHT, level_mapping=result)
    if verify and not is_answer_set(program, x):
        raise RuntimeError(
            "internal error: tightness-certified completion model %s failed the "
            "reduct check" % sorted(str(lit) for lit in x)
        )
    return report


def find_answer_sets(
    program: Program,
    limit: int | None = 1,
    max_answer_sets: int | None = None,
    verify: bool | None = None,
) -> SolveReport:
    """Answer sets among the first `limit` completion models (all models
    when limit is None).

    `max_answer_sets` stops enumeration early once that many models have
    been accepted.  With `verify` (default: on unless Python runs with
    -O) every tightness-certified model is re-checked against the reduct
    fixpoint; a failure would mean an internal error and raises.
    """
    if verify is None:
        verify = __debug__
    timings = PhaseTimings()
    start = time.perf_counter()
    renamed, renaming = eliminate_classical_negation(program)
    theory = completion(renamed)
    timings.complete = time.perf_counter() - start
    start = time.perf_counter()
    clause_set = to_cnf(theory, simplify=True)
    timings.clausify = time.perf_counter() - start

    atoms_by_index = theory_atoms(theory)  # variable i holds atoms_by_index[i-1]
    solver = Solver(clause_set)
    pos = pos_literals(program)
    reports: list[ModelReport] = []
    answer_sets: list[Interpretation] = []
    start = time.perf_counter()
    for model in solver.models(clause_set.atom_vars(), limit):
        x = frozenset(
            renaming.literal_for(atoms_by_index[v - 1])
            for v, value in model.items()
            if value
        )
        report = _certify_model(program, pos, x, verify)
        reports.append(report)
        if report.accepted:
            answer_sets.append(x)
            if max_answer_sets is not None and len(answer_sets) >= max_answer_sets:
                break
    timings.search = time.perf_counter() - start
    return SolveReport(answer_sets, reports, len(reports), solver.stats, timings)


def certify(program: Program, x: Interpretation) -> CertificateReport:
    """Evaluate every certificate for x and cross-check them.

    Any combination of outcomes that the certification theory rules out
    (a tight interpretation where the closed+supported status disagrees
    with answer-set status, or a completion-model status that disagrees
    with closed+supported) is reported as an internal error.
    """
    x = frozenset(x)
    consistent = is_consistent(x)
    closed = is_closed(program, x)
    supported = is_supported(program, x)
    tight = False
    mapping: LevelMapping | None = None
    cycle: CycleWitness | None = None
    if consistent:
        result = tight_on(program, x)
        if isinstance(result, CycleWitness):
            cycle = result
        else:
            tight = True
            mapping = result
    answer = is_answer_set(program, x)

    renamed, renaming = eliminate_classical_negation(program)
    theory = completion(renamed)
    vocabulary = set(theory_atoms(theory))
    renamed_atoms = {renaming.apply(lit).atom for lit in x}
    completion_model = renamed_atoms <= vocabulary and eval_completion(
        theory, renamed_atoms
    )

    errors = []
    if consistent and completion_model != (closed and supported):
        errors.append("completion-model status disagrees with closed+supported")
    if consistent and tight and answer != (closed and supported):
        errors.append("tight interpretation where answer-set status disagrees "
                      "with closed+supported")
    if answer and not (closed and supported):
        errors.append("answer set that is not closed and supported")
    return CertificateReport(
        consistent=consistent,
        closed=closed,
        supported=supported,
        tight=tight,
        level_mapping=mapping,
        cycle=cycle,
        answer_set=answer,
        completion_model=completion_model,
        internal_errors=errors,
    )
