"""Program completion and its conversion to CNF.

The completion of a negation-as-failure program (without classical
negation) has one equivalence per atom: the atom holds iff some rule
body for it holds.  Atoms heading no rule are equivalent to false, and
each constraint contributes a body that every model must falsify.

``to_cnf`` can first run a forced-value propagation over the theory:
atoms whose value is already decided by the equivalences alone (facts,
rule-less atoms, and everything that follows from them) are emitted as
unit clauses and substituted away.  This keeps the clause count near the
size of the reachable problem core while preserving the model set over
the atom variables exactly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Union

from .cnf import AUX_PREFIX, Clause, ClauseSet
from .syntax import Atom, Literal, Program, Rule

NEG_PREFIX = "__not_"

SignedAtom = tuple[Atom, bool]  # (atom, False) stands for the negated atom
Conjunction = tuple[SignedAtom, ...]
Disjunction = tuple[Conjunction, ...]


@dataclass
class CompletionTheory:
    """Equivalences ``atom <-> disjunction of conjunctions`` plus the
    constraint bodies that must stay false."""

    equivalences: dict[Atom, Disjunction]
    constraints: tuple[Conjunction, ...] = ()


@dataclass
class RenamingMap:
    """Classically negated literals and their fresh replacement atoms."""

    by_literal: dict[Literal, Atom] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self._by_atom = {atom: lit for lit, atom in self.by_literal.items()}

    def __len__(self) -> int:
        return len(self.by_literal)

    def apply(self, lit: Literal) -> Literal:
        """Rewrite one literal of the source program.  Negated literals
        outside the map get the same deterministic fresh name."""
        if lit.negated:
            atom = self.by_literal.get(lit)
            if atom is None:
                atom = Atom(NEG_PREFIX + lit.atom.predicate, lit.atom.args)
            return Literal(atom)
        return lit

    def literal_for(self, atom: Atom) -> Literal:
        """Map an atom of the renamed program back to a source literal."""
        return self._by_atom.get(atom, Literal(atom))


def eliminate_classical_negation(program: Program) -> tuple[Program, RenamingMap]:
    """Replace each classically negated atom by a fresh atom and forbid the
    pair; answer sets correspond one-to-one under the renaming."""
    mapping: dict[Literal, Atom] = {}
    for r in program:
        for lit in r.literals():
            if lit.negated and lit not in mapping:
                mapping[lit] = Atom(NEG_PREFIX + lit.atom.predicate, lit.atom.args)
    renaming = RenamingMap(mapping)
    if not mapping:
        return program, renaming
    rules = [
        Rule(
            None if r.head is None else renaming.apply(r.head),
            tuple(renaming.apply(b) for b in r.pos_body),
            tuple(renaming.apply(b) for b in r.neg_body),
        )
        for r in program
    ]
    for lit, fresh in mapping.items():
        rules.append(Rule(None, (Literal(lit.atom), Literal(fresh))))
    return Program(tuple(rules)), renaming


def completion(program: Program) -> CompletionTheory:
    """Clark completion; requires classical negation to be eliminated."""
    if program.has_classical_negation():
        raise ValueError(
            "completion is defined for programs without classical negation; "
            "run eliminate_classical_negation first"
        )
    equivalences: dict[Atom, list[Conjunction]] = {}
    for atom in program.atoms():
        equivalences[atom] = []
    constraints: list[Conjunction] = []
    for r in program:
        body: Conjunction = tuple(
            [(b.atom, True) for b in r.pos_body] + [(b.atom, False) for b in r.neg_body]
        )
        if r.head is None:
            constraints.append(body)
        else:
            equivalences[r.head.atom].append(body)
    return CompletionTheory(
        {atom: tuple(bodies) for atom, bodies in equivalences.items()},
        tuple(constraints),
    )


def _atom_set(x: Iterable[Union[Atom, Literal]]) -> frozenset[Atom]:
    out = set()
    for item in x:
        if isinstance(item, Literal):
            if item.negated:
                raise ValueError(
                    "completion models are atom sets; rename classical negation first"
                )
            out.add(item.atom)
        else:
            out.add(item)
    return frozenset(out)


def eval_completion(theory: CompletionTheory, x: Iterable[Union[Atom, Literal]]) -> bool:
    """True iff x satisfies every equivalence and falsifies every
    constraint body."""
    xs = _atom_set(x)

    def holds(conj: Conjunction) -> bool:
        return all((a in xs) == sign for a, sign in conj)

    for head, disj in theory.equivalences.items():
        if (head in xs) != any(holds(c) for c in disj):
            return False
    return not any(holds(c) for c in theory.constraints)


def theory_atoms(theory: CompletionTheory) -> list[Atom]:
    """Atoms in first-occurrence order: each head, then its bodies, then
    constraint bodies."""
    seen: dict[Atom, None] = {}
    for head, disj in theory.equivalences.items():
        seen.setdefault(head, None)
        for conj in disj:
            for a, _ in conj:
                seen.setdefault(a, None)
    for conj in theory.constraints:
        for a, _ in conj:
            seen.setdefault(a, None)
    return list(seen)


def _propagate(
    theory: CompletionTheory,
) -> tuple[dict[Atom, bool], dict[Atom, Disjunction], list[Conjunction], bool]:
    """Forward propagation of values forced by the equivalences.

    Returns forced values, residual equivalences for undetermined heads
    (satisfied conjuncts stripped, dead disjuncts dropped), residual
    constraint bodies, and an unsatisfiability flag.
    """
    items = list(theory.equivalences.items())
    occ: dict[Atom, list[tuple[int, int, bool]]] = {}
    remaining: list[list[int]] = []
    dead: list[list[bool]] = []
    live: list[int] = []
    values: dict[Atom, bool] = {}
    queue: deque[tuple[Atom, bool]] = deque()
    unsat = False

    def assign(atom: Atom, v: bool) -> None:
        nonlocal unsat
        if atom in values:
            if values[atom] != v:
                unsat = True
            return
        values[atom] = v
        queue.append((atom, v))

    for hi, (head, disj) in enumerate(items):
        remaining.append([len(conj) for conj in disj])
        dead.append([False] * len(disj))
        live.append(len(disj))
        for di, conj in enumerate(disj):
            for a, sign in conj:
                occ.setdefault(a, []).append((hi, di, sign))
        if not disj:
            assign(head, False)
        elif any(not conj for conj in disj):
            assign(head, True)

    c_rem = [len(conj) for conj in theory.constraints]
    c_dead = [False] * len(theory.constraints)
    c_occ: dict[Atom, list[tuple[int, bool]]] = {}
    for ci, conj in enumerate(theory.constraints):
        for a, sign in conj:
            c_occ.setdefault(a, []).append((ci, sign))
        if not conj:
            unsat = True

    while queue and not unsat:
        atom, v = queue.popleft()
        for hi, di, sign in occ.get(atom, ()):
            if dead[hi][di]:
                continue
            head = items[hi][0]
            if sign == v:
                remaining[hi][di] -= 1
                if remaining[hi][di] == 0:
                    assign(head, True)
            else:
                dead[hi][di] = True
                live[hi] -= 1
                if live[hi] == 0:
                    assign(head, False)
        for ci, sign in c_occ.get(atom, ()):
            if c_dead[ci]:
                continue
            if sign == v:
                c_rem[ci] -= 1
                if c_rem[ci] == 0:
                    unsat = True
            else:
                c_dead[ci] = True

    if unsat:
        return values, {}, [], True

    residual: dict[Atom, Disjunction] = {}
    for hi, (head, disj) in enumerate(items):
        if head in values:
            continue
        kept = []
        for di, conj in enumerate(disj):
            if dead[hi][di]:
                continue
            kept.append(tuple((a, s) for a, s in conj if a not in values))
        residual[head] = tuple(kept)
    res_constraints = []
    for ci, conj in enumerate(theory.constraints):
        if c_dead[ci]:
            continue
        res_constraints.append(tuple((a, s) for a, s in conj if a not in values))
    return values, residual, res_constraints, False


def to_cnf(theory: CompletionTheory, simplify: bool = False) -> ClauseSet:
    """Equisatisfiable clause set whose models, projected to the atom
    variables, are exactly the models of the theory.

    Disjuncts with at least two conjuncts get a definitional auxiliary
    variable; singleton disjuncts are distributed directly.  Atom
    variables are numbered in first-occurrence order, auxiliaries after
    them.  With `simplify`, atoms whose value the theory forces become
    unit clauses and the rest of the encoding shrinks accordingly; the
    projected model set is unchanged.
    """
    atom_order = theory_atoms(theory)
    if simplify:
        values, equivs, constraints, unsat = _propagate(theory)
    else:
        values, unsat = {}, False
        equivs = dict(theory.equivalences)
        constraints = list(theory.constraints)

    names = [str(a) for a in atom_order]
    if unsat:
        return ClauseSet([()], tuple(names))
    var = {a: i + 1 for i, a in enumerate(atom_order)}
    clauses: list[Clause] = []
    for a in atom_order:
        if a in values:
            clauses.append((var[a],) if values[a] else (-var[a],))

    def signed(a: Atom, sign: bool) -> int:
        return var[a] if sign else -var[a]

    for head in atom_order:
        if head not in equivs:
            continue
        h = var[head]
        reps: list[int | None] = []  # None marks a trivially true disjunct
        for conj in equivs[head]:
            if not conj:
                reps.append(None)
            elif len(conj) == 1:
                reps.append(signed(*conj[0]))
            else:
                names.append("%s%d" % (AUX_PREFIX, len(names) - len(atom_order) + 1))
                aux = len(names)
                for a, sign in conj:
                    clauses.append((-aux, signed(a, sign)))
                clauses.append((aux,) + tuple(-signed(a, sign) for a, sign in conj))
                reps.append(aux)
        if any(r is None for r in reps):
            clauses.append((h,))
        else:
            clauses.append((-h,) + tuple(reps))  # type: ignore[arg-type]
            for r in reps:
                clauses.append((h, -r))  # type: ignore[operator]
    for conj in constraints:
        clauses.append(tuple(-signed(a, sign) for a, sign in conj))
    return ClauseSet(clauses, tuple(names))
