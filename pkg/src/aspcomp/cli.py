"""Command-line front end.

Exit codes: 0 when the command succeeds (answer set found, model tight,
model verified, plan found), 1 when the check comes back negative, 2 on
usage, parse or instance errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .benchmarks import (
    chain_instance,
    format_bench_table,
    parse_instance,
    run_benchmark,
)
from .cnf import write_dimacs
from .completion import (
    CompletionTheory,
    completion,
    eliminate_classical_negation,
    to_cnf,
)
from .grounding import ground, parse_schematic_program
from .pipeline import certify, find_answer_sets
from .semantics import enumerate_answer_sets_bruteforce
from .syntax import Interpretation, Program, parse_literal, render_program
from .tightness import CycleWitness, tight_on


def _load_program(path: str) -> Program:
    return ground(parse_schematic_program(Path(path).read_text()))


def _parse_model(items: list[str]) -> Interpretation:
    return frozenset(parse_literal(item) for item in items)


def _format_set(x: Interpretation) -> str:
    return " ".join(sorted(str(lit) for lit in x)) if x else "(empty)"


def _render_conjunction(conj) -> str:
    if not conj:
        return "true"
    parts = [str(atom) if positive else "-%s" % atom for atom, positive in conj]
    return " & ".join(parts)


def _render_theory(theory: CompletionTheory) -> str:
    lines = []
    for atom, disjuncts in theory.equivalences.items():
        if not disjuncts:
            body = "false"
        else:
            rendered = []
            for conj in disjuncts:
                text = _render_conjunction(conj)
                if len(conj) > 1 and len(disjuncts) > 1:
                    text = "(%s)" % text
                rendered.append(text)
            body = " | ".join(rendered)
        lines.append("%s <-> %s" % (atom, body))
    for conj in theory.constraints:
        lines.append("%s -> false" % _render_conjunction(conj))
    return "\n".join(lines) + "\n"


def _cmd_ground(args: argparse.Namespace) -> int:
    sys.stdout.write(render_program(_load_program(args.file)))
    return 0


def _cmd_complete(args: argparse.Namespace) -> int:
    program, _ = eliminate_classical_negation(_load_program(args.file))
    theory = completion(program)
    sys.stdout.write(_render_theory(theory))
    if args.dimacs or args.map:
        cnf_text, map_text = write_dimacs(to_cnf(theory))
        if args.dimacs:
            Path(args.dimacs).write_text(cnf_text)
        if args.map:
            Path(args.map).write_text(map_text)
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    program = _load_program(args.file)
    if args.brute_force:
        answer_sets = enumerate_answer_sets_bruteforce(program, bound=args.bound)
        for i, x in enumerate(answer_sets, start=1):
            print("answer set %d: %s" % (i, _format_set(x)))
        print("%d answer set(s)" % len(answer_sets))
        return 0 if answer_sets else 1
    limit = None if args.limit == 0 else args.limit
    report = find_answer_sets(program, limit=limit)
    for i, x in enumerate(report.answer_sets, start=1):
        print("answer set %d: %s" % (i, _format_set(x)))
    print("%d answer set(s) among %d completion model(s)"
          % (len(report.answer_sets), report.completion_models_seen))
    return 0 if report.answer_sets else 1


def _cmd_check_tight(args: argparse.Namespace) -> int:
    program = _load_program(args.file)
    model = _parse_model(args.model)
    result = tight_on(program, model)
    if isinstance(result, CycleWitness):
        print("not tight: %s" % result)
        return 1
    print("tight")
    for lit in sorted(result, key=lambda l: (result[l], str(l))):
        print("%s\t%d" % (lit, result[lit]))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    program = _load_program(args.file)
    model = _parse_model(args.model)
    report = certify(program, model)

    def yn(flag: bool) -> str:
        return "yes" if flag else "no"

    print("consistent: %s" % yn(report.consistent))
    print("closed: %s" % yn(report.closed))
    print("supported: %s" % yn(report.supported))
    if report.cycle is not None:
        print("tight: no (cycle: %s)" % report.cycle)
    else:
        print("tight: %s" % yn(report.tight))
    print("completion model: %s" % yn(report.completion_model))
    print("answer set: %s" % yn(report.answer_set))
    for message in report.internal_errors:
        print("internal error: %s" % message, file=sys.stderr)
    return 0 if report.answer_set else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.instance is not None:
        if args.blocks is not None or args.horizon is not None:
            raise ValueError("give either --instance or --blocks/--horizon")
        instance = parse_instance(Path(args.instance).read_text())
    else:
        if args.blocks is None or args.horizon is None:
            raise ValueError("--blocks and --horizon are required "
                             "without --instance")
        instance = chain_instance(args.blocks, args.horizon)
    row = run_benchmark(instance)
    sys.stdout.write(format_bench_table([row]))
    return 0 if row.plan is not None else 1


def _cmd_plan(args: argparse.Namespace) -> int:
    instance = parse_instance(Path(args.file).read_text())
    row = run_benchmark(instance)
    if row.plan is None:
        print("unsolvable within horizon %d" % instance.horizon)
        return 1
    print(row.plan)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aspcomp",
        description="Answer set solving via program completion and "
                    "tightness certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ground", help="ground a program and print it")
    p.add_argument("file")
    p.set_defaults(func=_cmd_ground)

    p = sub.add_parser("complete", help="print the program's completion")
    p.add_argument("file")
    p.add_argument("--dimacs", metavar="PATH", help="also write DIMACS CNF")
    p.add_argument("--map", metavar="PATH", help="also write the variable map")
    p.set_defaults(func=_cmd_complete)

    p = sub.add_parser("solve", help="enumerate answer sets")
    p.add_argument("file")
    p.add_argument("--limit", type=int, default=0, metavar="N",
                   help="completion models to examine (0 = all)")
    p.add_argument("--brute-force", action="store_true",
                   help="enumerate candidate sets directly instead")
    p.add_argument("--bound", type=int, default=20, metavar="N",
                   help="free-literal bound for --brute-force")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("check-tight",
                       help="check tightness on a model and print levels")
    p.add_argument("file")
    p.add_argument("--model", nargs="*", default=[], metavar="LIT")
    p.set_defaults(func=_cmd_check_tight)

    p = sub.add_parser("verify", help="run every certificate on a model")
    p.add_argument("file")
    p.add_argument("--model", nargs="*", default=[], metavar="LIT")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="run a benchmark")
    bench_sub = p.add_subparsers(dest="family", required=True)
    b = bench_sub.add_parser("blocks", help="blocks-world planning")
    b.add_argument("--blocks", type=int, metavar="N")
    b.add_argument("--horizon", type=int, metavar="H")
    b.add_argument("--instance", metavar="FILE")
    b.set_defaults(func=_cmd_bench)

    p = sub.add_parser("plan", help="solve a blocks-world instance file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_plan)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())
