"""Clause sets over integer variables, with DIMACS reading and writing.

Variable indices are 1-based.  Auxiliary variables introduced by clause
conversion carry the reserved ``__aux`` name prefix, which the program
grammar cannot produce, so they are always distinguishable from atom
variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field

AUX_PREFIX = "__aux"

Clause = tuple[int, ...]


@dataclass
class ClauseSet:
    """CNF clauses plus the variable/name table.

    ``names[i]`` is the name of variable ``i + 1``; every index used in a
    clause has an entry.
    """

    clauses: list[Clause] = field(default_factory=list)
    names: tuple[str, ...] = ()

    @property
    def num_vars(self) -> int:
        return len(self.names)

    def var_map(self) -> dict[str, int]:
        return {name: i + 1 for i, name in enumerate(self.names)}

    def name_of(self, var: int) -> str:
        return self.names[var - 1]

    def atom_vars(self) -> list[int]:
        """Indices of non-auxiliary variables."""
        return [
            i + 1 for i, name in enumerate(self.names) if not name.startswith(AUX_PREFIX)
        ]


def write_dimacs(clause_set: ClauseSet) -> tuple[str, str]:
    """Returns the DIMACS CNF text and the tab-separated symbol table."""
    lines = ["p cnf %d %d" % (clause_set.num_vars, len(clause_set.clauses))]
    for cl in clause_set.clauses:
        lines.append(" ".join(str(lit) for lit in cl) + (" 0" if cl else "0"))
    cnf = "\n".join(lines) + "\n"
    table = "".join(
        "%d\t%s\n" % (i + 1, name) for i, name in enumerate(clause_set.names)
    )
    return cnf, table


def read_dimacs(cnf_text: str, map_text: str | None = None) -> ClauseSet:
    """Parse DIMACS CNF as emitted by :func:`write_dimacs`.

    Comment lines starting with ``c`` are skipped.  Without a symbol
    table the variables are named ``v1`` .. ``vN``.
    """
    num_vars = None
    tokens: list[int] = []
    for line in cnf_text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError("malformed DIMACS header: %r" % line)
            num_vars = int(parts[2])
            num_clauses = int(parts[3])
            continue
        tokens.extend(int(t) for t in line.split())
    if num_vars is None:
        raise ValueError("missing DIMACS header")
    clauses: list[Clause] = []
    current: list[int] = []
    for t in tokens:
        if t == 0:
            clauses.append(tuple(current))
            current = []
        else:
            if abs(t) > num_vars:
                raise ValueError("literal %d out of range" % t)
            current.append(t)
    if current:
        raise ValueError("unterminated clause at end of input")
    if len(clauses) != num_clauses:
        raise ValueError("header declares %d clause(s), found %d"
                         % (num_clauses, len(clauses)))
    if map_text is not None:
        names: list[str] = []
        for line in map_text.splitlines():
            if not line.strip():
                continue
            idx_text, name = line.split("\t", 1)
            idx = int(idx_text)
            if idx != len(names) + 1:
                raise ValueError("symbol table indices must be 1..N in order")
            names.append(name)
        if len(names) < num_vars:
            raise ValueError("symbol table shorter than variable count")
    else:
        names = ["v%d" % (i + 1) for i in range(num_vars)]
    return ClauseSet(clauses, tuple(names))
