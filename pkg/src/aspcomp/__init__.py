"""Answer set programming via completion, SAT and tightness certificates.

The pipeline grounds a program, builds its completion, enumerates the
completion's classical models with an internal SAT solver, and certifies
each model: when the program is tight on the model a level mapping
proves it is an answer set without touching the reduct; otherwise the
reduct fixpoint check decides.
"""

from .benchmarks import (
    BlocksInstance,
    GraphInstance,
    InstanceError,
    Plan,
    chain_instance,
    extract_plan,
    format_bench_table,
    generate_blocks_world,
    generate_hamiltonian,
    parse_instance,
    run_benchmark,
)
from .cnf import ClauseSet, read_dimacs, write_dimacs
from .completion import (
    CompletionTheory,
    completion,
    eliminate_classical_negation,
    eval_completion,
    theory_atoms,
    to_cnf,
)
from .grounding import (
    SchematicProgram,
    UnsafeRuleError,
    ground,
    instance_count,
    parse_schematic_program,
)
from .pipeline import (
    CertificateReport,
    ModelReport,
    SolveReport,
    certify,
    find_answer_sets,
)
from .sat import Solver, SolveStats, enumerate_models, solve
from .semantics import (
    BruteForceBoundError,
    enumerate_answer_sets_bruteforce,
    is_answer_set,
    is_closed,
    is_supported,
    least_closed_set,
    reduct,
)
from .syntax import (
    Atom,
    Literal,
    ParseError,
    Program,
    Rule,
    is_consistent,
    parse_literal,
    parse_program,
    pos_literals,
    render_program,
)
from .tightness import (
    CycleWitness,
    disjoint_from_pos,
    globally_tight,
    positive_dependency_graph,
    tight_on,
    verify_level_mapping,
)

__version__ = "0.1.0"

__all__ = [
    "Atom",
    "BlocksInstance",
    "BruteForceBoundError",
    "CertificateReport",
    "ClauseSet",
    "CompletionTheory",
    "CycleWitness",
    "GraphInstance",
    "InstanceError",
    "Literal",
    "ModelReport",
    "ParseError",
    "Plan",
    "Program",
    "Rule",
    "SchematicProgram",
    "SolveReport",
    "SolveStats",
    "Solver",
    "UnsafeRuleError",
    "certify",
    "chain_instance",
    "completion",
    "disjoint_from_pos",
    "eliminate_classical_negation",
    "enumerate_answer_sets_bruteforce",
    "enumerate_models",
    "eval_completion",
    "extract_plan",
    "find_answer_sets",
    "format_bench_table",
    "generate_blocks_world",
    "generate_hamiltonian",
    "globally_tight",
    "ground",
    "instance_count",
    "is_answer_set",
    "is_closed",
    "is_consistent",
    "is_supported",
    "least_closed_set",
    "parse_instance",
    "parse_literal",
    "parse_program",
    "parse_schematic_program",
    "pos_literals",
    "positive_dependency_graph",
    "read_dimacs",
    "reduct",
    "render_program",
    "run_benchmark",
    "solve",
    "theory_atoms",
    "tight_on",
    "to_cnf",
    "verify_level_mapping",
    "write_dimacs",
]
