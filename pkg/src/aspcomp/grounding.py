"""Schematic programs with variables and their grounding.

Variables (uppercase-initial names) range over every object constant
occurring in the program, symbols and integers alike.  Rule bodies may
carry comparison conditions ``X = Y``, ``X != Y`` and ``Y = X + 1``; a
substitution yields a ground instance only if it satisfies every
condition, and the successor form is satisfied only when both sides are
integers.  Conditions are erased from the emitted instances.

Grounding is eager: :func:`ground` materializes the full instance list,
which is fine for desk-scale programs (up to a few hundred thousand
rules).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Union

from .syntax import (
    Atom,
    Literal,
    ParseError,
    Program,
    Rule,
    Term,
    Token,
    TokenStream,
    tokenize,
)


@dataclass(frozen=True)
class Variable:
    name: str

    def __str__(self) -> str:
        return self.name


STerm = Union[str, int, Variable]


@dataclass(frozen=True)
class SchematicAtom:
    predicate: str
    args: tuple[STerm, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.predicate
        return "%s(%s)" % (self.predicate, ",".join(str(a) for a in self.args))


@dataclass(frozen=True)
class SchematicLiteral:
    atom: SchematicAtom
    negated: bool = False

    def __str__(self) -> str:
        return ("-" if self.negated else "") + str(self.atom)


@dataclass(frozen=True)
class BuiltinCondition:
    """``lhs = rhs`` (eq), ``lhs != rhs`` (neq) or ``lhs = rhs + 1`` (succ)."""

    kind: str  # "eq" | "neq" | "succ"
    lhs: STerm
    rhs: STerm

    def holds(self, lhs: Term, rhs: Term) -> bool:
        if self.kind == "eq":
            return lhs == rhs
        if self.kind == "neq":
            return lhs != rhs
        # successor: only integer pairs can satisfy it
        return isinstance(lhs, int) and isinstance(rhs, int) and lhs == rhs + 1

    def __str__(self) -> str:
        if self.kind == "eq":
            return "%s = %s" % (self.lhs, self.rhs)
        if self.kind == "neq":
            return "%s != %s" % (self.lhs, self.rhs)
        return "%s = %s + 1" % (self.lhs, self.rhs)


@dataclass(frozen=True)
class SchematicRule:
    head: SchematicLiteral | None
    pos_body: tuple[SchematicLiteral, ...] = ()
    neg_body: tuple[SchematicLiteral, ...] = ()
    conditions: tuple[BuiltinCondition, ...] = ()

    def variables(self) -> list[Variable]:
        """Distinct variables, positive body first, in first-occurrence order."""
        seen: dict[Variable, None] = {}
        groups = (
            [lit.atom.args for lit in self.pos_body]
            + ([self.head.atom.args] if self.head is not None else [])
            + [lit.atom.args for lit in self.neg_body]
            + [(c.lhs, c.rhs) for c in self.conditions]
        )
        for args in groups:
            for a in args:
                if isinstance(a, Variable):
                    seen.setdefault(a, None)
        return list(seen)

    def unsafe_variables(self) -> list[Variable]:
        """Variables of the head or negative body missing from the positive body."""
        pos: set[Variable] = set()
        for lit in self.pos_body:
            pos.update(a for a in lit.atom.args if isinstance(a, Variable))
        bad: dict[Variable, None] = {}
        check = list(self.neg_body)
        if self.head is not None:
            check.insert(0, self.head)
        for lit in check:
            for a in lit.atom.args:
                if isinstance(a, Variable) and a not in pos:
                    bad.setdefault(a, None)
        return list(bad)

    def __str__(self) -> str:
        body = [str(b) for b in self.pos_body]
        body += [str(c) for c in self.conditions]
        body += ["not " + str(b) for b in self.neg_body]
        if self.head is None:
            return ":- %s." % ", ".join(body)
        if not body:
            return "%s." % self.head
        return "%s :- %s." % (self.head, ", ".join(body))


@dataclass(frozen=True)
class SchematicProgram:
    rules: tuple[SchematicRule, ...] = ()

    def __iter__(self) -> Iterator[SchematicRule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)


@dataclass(frozen=True)
class ConstantUniverse:
    """All object constants of a program, split by sort."""

    symbols: frozenset[str]
    integers: frozenset[int]

    def ordered(self) -> tuple[Term, ...]:
        """Integers ascending, then symbols alphabetically."""
        return tuple(sorted(self.integers)) + tuple(sorted(self.symbols))

    def __len__(self) -> int:
        return len(self.symbols) + len(self.integers)


class UnsafeRuleError(ValueError):
    def __init__(self, rule: SchematicRule, variables: list[Variable]):
        names = ", ".join(v.name for v in variables)
        super().__init__(
            "unsafe rule %r: variable(s) %s do not occur in the positive body"
            % (str(rule), names)
        )
        self.rule = rule
        self.variables = variables


# ---------------------------------------------------------------------------
# Parser.

def _parse_term(ts: TokenStream) -> STerm:
    tok = ts.next()
    if tok.kind == "ident":
        return tok.text
    if tok.kind == "int":
        return int(tok.text)
    if tok.kind == "var":
        return Variable(tok.text)
    ts.error("expected a term, found %r" % (tok.text or "end of input"), tok)
    raise AssertionError("unreachable")


def _parse_satom(ts: TokenStream) -> SchematicAtom:
    name = ts.expect("ident")
    args: tuple[STerm, ...] = ()
    if ts.peek().kind == "(":
        ts.next()
        parts = [_parse_term(ts)]
        while ts.peek().kind == ",":
            ts.next()
            parts.append(_parse_term(ts))
        ts.expect(")")
        args = tuple(parts)
    return SchematicAtom(name.text, args)


def _parse_condition(ts: TokenStream, lhs: STerm) -> BuiltinCondition:
    op = ts.next()
    if op.kind == "!=":
        return BuiltinCondition("neq", lhs, _parse_term(ts))
    if op.kind != "=":
        ts.error("expected '=' or '!='", op)
    rhs = _parse_term(ts)
    if ts.peek().kind == "+":
        ts.next()
        one = ts.expect("int")
        if one.text != "1":
            ts.error("only '+ 1' is supported in successor conditions", one)
        return BuiltinCondition("succ", lhs, rhs)
    return BuiltinCondition("eq", lhs, rhs)


_Elem = Union[tuple[str, SchematicLiteral], tuple[str, BuiltinCondition]]


def _parse_body_elem(ts: TokenStream) -> _Elem:
    tok = ts.peek()
    if tok.kind == "not":
        ts.next()
        if ts.peek().kind == "not":
            ts.error("negation as failure cannot be nested")
        negated = False
        if ts.peek().kind == "-":
            ts.next()
            negated = True
        return ("neg", SchematicLiteral(_parse_satom(ts), negated))
    if tok.kind == "-":
        ts.next()
        return ("pos", SchematicLiteral(_parse_satom(ts), True))
    if tok.kind in ("var", "int"):
        return ("cond", _parse_condition(ts, _parse_term(ts)))
    if tok.kind == "ident":
        nxt = ts.tokens[ts.pos + 1]
        if nxt.kind in ("=", "!="):
            return ("cond", _parse_condition(ts, _parse_term(ts)))
        return ("pos", SchematicLiteral(_parse_satom(ts)))
    ts.error("expected a body element, found %r" % (tok.text or "end of input"))
    raise AssertionError("unreachable")


def _parse_head(ts: TokenStream) -> SchematicLiteral:
    negated = False
    if ts.peek().kind == "-":
        ts.next()
        negated = True
    return SchematicLiteral(_parse_satom(ts), negated)


def _parse_srule(ts: TokenStream) -> SchematicRule:
    head: SchematicLiteral | None
    if ts.peek().kind == ":-":
        ts.next()
        head = None
    else:
        head = _parse_head(ts)
        if ts.peek().kind == ".":
            ts.next()
            return SchematicRule(head)
        ts.expect(":-")
    pos: list[SchematicLiteral] = []
    neg: list[SchematicLiteral] = []
    conds: list[BuiltinCondition] = []
    while True:
        role, elem = _parse_body_elem(ts)
        if role == "pos":
            pos.append(elem)  # type: ignore[arg-type]
        elif role == "neg":
            neg.append(elem)  # type: ignore[arg-type]
        else:
            conds.append(elem)  # type: ignore[arg-type]
        if ts.peek().kind != ",":
            break
        ts.next()
    ts.expect(".")
    if head is None and not pos and not neg and not conds:
        ts.error("constraint with an empty body")
    return SchematicRule(head, tuple(pos), tuple(neg), tuple(conds))


def parse_schematic_program(text: str) -> SchematicProgram:
    """Parse program text that may contain variables and conditions."""
    ts = TokenStream(tokenize(text))
    rules = []
    while ts.peek().kind != "eof":
        rules.append(_parse_srule(ts))
    return SchematicProgram(tuple(rules))


def render_schematic_program(program: SchematicProgram) -> str:
    return "".join(str(r) + "\n" for r in program)


# ---------------------------------------------------------------------------
# Grounding.

def collect_constants(program: SchematicProgram) -> ConstantUniverse:
    """Every symbol and integer appearing in any rule, conditions included."""
    symbols: set[str] = set()
    integers: set[int] = set()

    def add(term: STerm) -> None:
        if isinstance(term, Variable):
            return
        if isinstance(term, int):
            integers.add(term)
        else:
            symbols.add(term)

    for rule in program:
        lits = list(rule.pos_body) + list(rule.neg_body)
        if rule.head is not None:
            lits.append(rule.head)
        for lit in lits:
            for a in lit.atom.args:
                add(a)
        for cond in rule.conditions:
            add(cond.lhs)
            add(cond.rhs)
    return ConstantUniverse(frozenset(symbols), frozenset(integers))


def _compile_literal(lit: SchematicLiteral, index: dict[Variable, int]):
    """Precompute arg slots: (False, constant) or (True, position in sub)."""
    slots = tuple(
        (True, index[a]) if isinstance(a, Variable) else (False, a)
        for a in lit.atom.args
    )
    return lit.negated, lit.atom.predicate, slots


def _instantiate(compiled, sub) -> Literal:
    negated, pred, slots = compiled
    return Literal(
        Atom(pred, tuple(sub[v] if is_var else v for is_var, v in slots)), negated
    )


def _resolve(term: STerm, index: dict[Variable, int], sub) -> Term:
    if isinstance(term, Variable):
        return sub[index[term]]
    return term


def ground(program: SchematicProgram) -> Program:
    """All condition-satisfying instances over the constant universe.

    Output order is deterministic: rule order, then lexicographic
    substitution order over the sorted universe.
    """
    universe = collect_constants(program).ordered()
    out: list[Rule] = []
    for rule in program:
        bad = rule.unsafe_variables()
        if bad:
            raise UnsafeRuleError(rule, bad)
        variables = rule.variables()
        index = {v: i for i, v in enumerate(variables)}

        # Variables occurring only in conditions never show up in the
        # instance, so they are handled existentially instead of
        # multiplying out duplicate instances.
        atom_vars: set[Variable] = set()
        for lit in itertools.chain(
            rule.pos_body, [] if rule.head is None else [rule.head], rule.neg_body
        ):
            atom_vars.update(a for a in lit.atom.args if isinstance(a, Variable))
        avars = [v for v in variables if v in atom_vars]
        cvars = [v for v in variables if v not in atom_vars]

        head_c = None if rule.head is None else _compile_literal(rule.head, index)
        pos_c = [_compile_literal(lit, index) for lit in rule.pos_body]
        neg_c = [_compile_literal(lit, index) for lit in rule.neg_body]

        avar_conds = [
            c
            for c in rule.conditions
            if not any(isinstance(t, Variable) and t not in atom_vars for t in (c.lhs, c.rhs))
        ]
        cvar_conds = [c for c in rule.conditions if c not in avar_conds]

        n_av, n_cv = len(avars), len(cvars)
        sub = [None] * len(variables)
        av_pos = [index[v] for v in avars]
        cv_pos = [index[v] for v in cvars]
        for choice in itertools.product(universe, repeat=n_av):
            for i, p in enumerate(av_pos):
                sub[p] = choice[i]
            if not all(
                c.holds(_resolve(c.lhs, index, sub), _resolve(c.rhs, index, sub))
                for c in avar_conds
            ):
                continue
            if cvar_conds or cvars:
                satisfiable = False
                for ext in itertools.product(universe, repeat=n_cv):
                    for i, p in enumerate(cv_pos):
                        sub[p] = ext[i]
                    if all(
                        c.holds(_resolve(c.lhs, index, sub), _resolve(c.rhs, index, sub))
                        for c in cvar_conds
                    ):
                        satisfiable = True
                        break
                if not satisfiable:
                    continue
            out.append(
                Rule(
                    None if head_c is None else _instantiate(head_c, sub),
                    tuple(_instantiate(c, sub) for c in pos_c),
                    tuple(_instantiate(c, sub) for c in neg_c),
                )
            )
    return Program(tuple(out))


def instance_count(program: SchematicProgram) -> tuple[int, int]:
    """(number of ground rules, number of distinct ground atoms)."""
    g = ground(program)
    atoms = {lit.atom for r in g for lit in r.literals()}
    return len(g), len(atoms)
