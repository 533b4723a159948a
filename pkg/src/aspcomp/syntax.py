"""Ground normal logic programs: syntax tree, parser, and printer.

A program is an ordered list of rules

    head :- b1, ..., bm, not c1, ..., not cn.

where the head is a literal or absent (a constraint) and each body element
is a literal, optionally under negation as failure.  A literal is an atom
with an optional classical-negation sign, written ``-``.  Predicate and
symbol names are lowercase-initial; uppercase-initial names are variables
and belong to schematic programs only (see :mod:`aspcomp.grounding`).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Union

Term = Union[str, int]


class ParseError(ValueError):
    """Syntax error with 1-based line and column of the offending token."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__("line %d, column %d: %s" % (line, column, message))
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Atom:
    """A predicate applied to ground terms (symbols or integers)."""

    predicate: str
    args: tuple[Term, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.predicate
        return "%s(%s)" % (self.predicate, ",".join(str(a) for a in self.args))


@dataclass(frozen=True)
class Literal:
    """An atom or its classical negation."""

    atom: Atom
    negated: bool = False

    def complement(self) -> "Literal":
        return Literal(self.atom, not self.negated)

    def __str__(self) -> str:
        return ("-" if self.negated else "") + str(self.atom)


# An interpretation is a finite set of literals; consistency means it
# contains no complementary pair.
Interpretation = frozenset  # frozenset[Literal]


@dataclass(frozen=True)
class Rule:
    """``head :- pos_body, not neg_body.``  A head of None is a constraint."""

    head: Literal | None
    pos_body: tuple[Literal, ...] = ()
    neg_body: tuple[Literal, ...] = ()

    @cached_property
    def pos_set(self) -> frozenset[Literal]:
        return frozenset(self.pos_body)

    @cached_property
    def neg_set(self) -> frozenset[Literal]:
        return frozenset(self.neg_body)

    @property
    def is_fact(self) -> bool:
        return self.head is not None and not self.pos_body and not self.neg_body

    @property
    def is_constraint(self) -> bool:
        return self.head is None

    def literals(self) -> Iterator[Literal]:
        if self.head is not None:
            yield self.head
        yield from self.pos_body
        yield from self.neg_body

    def __str__(self) -> str:
        body = [str(b) for b in self.pos_body]
        body += ["not " + str(b) for b in self.neg_body]
        if self.head is None:
            return ":- %s." % ", ".join(body)
        if not body:
            return "%s." % self.head
        return "%s :- %s." % (self.head, ", ".join(body))


@dataclass(frozen=True)
class Program:
    """An ordered list of rules.

    Duplicate rules are kept in the list, but every semantic operation
    treats the program as the set of its rules.
    """

    rules: tuple[Rule, ...] = ()

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def literals(self) -> list[Literal]:
        """Distinct literals in order of first occurrence."""
        seen: dict[Literal, None] = {}
        for r in self.rules:
            for lit in r.literals():
                seen.setdefault(lit, None)
        return list(seen)

    def atoms(self) -> list[Atom]:
        """Distinct atoms in order of first occurrence."""
        seen: dict[Atom, None] = {}
        for r in self.rules:
            for lit in r.literals():
                seen.setdefault(lit.atom, None)
        return list(seen)

    def head_literals(self) -> list[Literal]:
        seen: dict[Literal, None] = {}
        for r in self.rules:
            if r.head is not None:
                seen.setdefault(r.head, None)
        return list(seen)

    def has_classical_negation(self) -> bool:
        return any(lit.negated for r in self.rules for lit in r.literals())


def pos_literals(program: Program) -> frozenset[Literal]:
    """Literals that occur without negation as failure in some rule body."""
    return frozenset(lit for r in program for lit in r.pos_body)


def is_consistent(literals: Iterable[Literal]) -> bool:
    """True iff the set contains no literal together with its complement."""
    lits = literals if isinstance(literals, (set, frozenset)) else frozenset(literals)
    return not any(lit.complement() in lits for lit in lits)


# ---------------------------------------------------------------------------
# Tokenizer, shared with the schematic-program parser.

@dataclass(frozen=True)
class Token:
    kind: str  # "ident" | "var" | "int" | "not" | one of the punctuation marks
    text: str
    line: int
    column: int


_PUNCT2 = (":-", "!=")
_PUNCT1 = ".,()=+-"


def tokenize(text: str) -> list[Token]:
    toks: list[Token] = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if c == "%":  # comment to end of line
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        two = text[i : i + 2]
        if two in _PUNCT2:
            toks.append(Token(two, two, line, start_col))
            i += 2
            col += 2
            continue
        if c in _PUNCT1:
            toks.append(Token(c, c, line, start_col))
            i += 1
            col += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("int", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if c.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if word == "not":
                kind = "not"
            elif word[0].islower():
                kind = "ident"
            else:
                kind = "var"
            toks.append(Token(kind, word, line, start_col))
            col += j - i
            i = j
            continue
        raise ParseError("unexpected character %r" % c, line, col)
    toks.append(Token("eof", "", line, col))
    return toks


class TokenStream:
    """Cursor over a token list with error helpers."""

    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            self.error("expected %r, found %r" % (kind, tok.text or "end of input"), tok)
        return self.next()

    def error(self, message: str, tok: Token | None = None) -> None:
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.column)


# ---------------------------------------------------------------------------
# Ground-program parser.

def _parse_ground_term(ts: TokenStream) -> Term:
    tok = ts.peek()
    if tok.kind == "ident":
        ts.next()
        return tok.text
    if tok.kind == "int":
        ts.next()
        return int(tok.text)
    if tok.kind == "var":
        ts.error("variable %r is not allowed in a ground program" % tok.text)
    ts.error("expected a term, found %r" % (tok.text or "end of input"))
    raise AssertionError("unreachable")


def _parse_ground_literal(ts: TokenStream) -> Literal:
    negated = False
    if ts.peek().kind == "-":
        ts.next()
        negated = True
    tok = ts.peek()
    if tok.kind == "var":
        ts.error("variable %r is not allowed in a ground program" % tok.text)
    name = ts.expect("ident")
    args: tuple[Term, ...] = ()
    if ts.peek().kind == "(":
        ts.next()
        parts = [_parse_ground_term(ts)]
        while ts.peek().kind == ",":
            ts.next()
            parts.append(_parse_ground_term(ts))
        ts.expect(")")
        args = tuple(parts)
    return Literal(Atom(name.text, args), negated)


def _parse_ground_body_elem(ts: TokenStream) -> tuple[Literal, bool]:
    """Returns (literal, under_naf)."""
    if ts.peek().kind == "not":
        ts.next()
        if ts.peek().kind == "not":
            ts.error("negation as failure cannot be nested")
        return _parse_ground_literal(ts), True
    lit = _parse_ground_literal(ts)
    if ts.peek().kind in ("=", "!="):
        ts.error("comparison conditions are only allowed in schematic rules")
    return lit, False


def _parse_ground_rule(ts: TokenStream) -> Rule:
    head: Literal | None
    if ts.peek().kind == ":-":
        ts.next()
        head = None
    else:
        head = _parse_ground_literal(ts)
        if ts.peek().kind == ".":
            ts.next()
            return Rule(head)
        ts.expect(":-")
    pos: list[Literal] = []
    neg: list[Literal] = []
    lit, naf = _parse_ground_body_elem(ts)
    (neg if naf else pos).append(lit)
    while ts.peek().kind == ",":
        ts.next()
        lit, naf = _parse_ground_body_elem(ts)
        (neg if naf else pos).append(lit)
    ts.expect(".")
    if head is None and not pos and not neg:
        ts.error("constraint with an empty body")
    return Rule(head, tuple(pos), tuple(neg))


def parse_program(text: str) -> Program:
    """Parse ground program text; raises ParseError with line and column."""
    ts = TokenStream(tokenize(text))
    rules = []
    while ts.peek().kind != "eof":
        rules.append(_parse_ground_rule(ts))
    return Program(tuple(rules))


def parse_literal(text: str) -> Literal:
    """Parse a single ground literal such as ``p``, ``-q(a,1)``."""
    ts = TokenStream(tokenize(text))
    lit = _parse_ground_literal(ts)
    if ts.peek().kind != "eof":
        ts.error("trailing input after literal")
    return lit


def render_program(program: Program) -> str:
    """One rule per line; parsing the result reproduces the program."""
    return "".join(str(r) + "\n" for r in program)
