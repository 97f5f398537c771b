"""``ilpalloc`` command line.

Exit codes: 0 success, 1 infeasible (or a failed verification), 2 invalid
input, 3 limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import benchmark
from .errors import IlpAllocError
from .generator import GeneratorParams, generate
from .io import allocation_to_dict, dumps_instance, load_allocation, load_instance
from .lp_format import export_lp
from .model import check_feasibility, objective_value, validate_instance
from .solvers import SOLVERS, Status, run_solver
from .standard_form import build_standard_form, dimensions, encode_allocation, verify_solution

EXIT_OK, EXIT_INFEASIBLE, EXIT_INVALID, EXIT_LIMIT = 0, 1, 2, 3


def _interval(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a:b, got {text!r}")


def _write(path, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_gen(args) -> int:
    defaults = GeneratorParams(0, 0, 0)
    params = GeneratorParams(
        seed=args.seed,
        n_components=args.components,
        n_machines=args.machines,
        mem_req=args.mem_req or defaults.mem_req,
        cpu_req=args.cpu_req or defaults.cpu_req,
        mem_cap=args.mem_cap or defaults.mem_cap,
        cpu_cap=args.cpu_cap or defaults.cpu_cap,
        weight=args.weight or defaults.weight,
    )
    result = generate(params)
    _write(args.output, dumps_instance(result.instance, result.metadata()))
    return EXIT_OK


def _load_checked(path):
    inst = load_instance(path)
    check = validate_instance(inst)
    if not check.structurally_valid:
        raise IlpAllocError("; ".join(str(i) for i in check.issues))
    return inst


def cmd_solve(args) -> int:
    inst = _load_checked(args.input)
    report = run_solver(
        args.solver, inst, symmetry_breaking=not args.no_symmetry, node_limit=args.node_limit
    )
    summary = {
        "status": report.status.value,
        "objective": report.objective,
        "nodes": report.nodes_explored,
        "elapsed_ms": round(report.elapsed_ms, 3),
    }
    if report.allocation is not None:
        summary["assignment"] = list(report.allocation.assignment)
        if args.out:
            doc = allocation_to_dict(report.allocation, report.objective)
            Path(args.out).write_text(json.dumps(doc) + "\n")
    print(json.dumps(summary))
    if report.status is Status.INFEASIBLE:
        return EXIT_INFEASIBLE
    if report.status is Status.LIMIT_EXCEEDED:
        return EXIT_LIMIT
    return EXIT_OK


def cmd_export(args) -> int:
    inst = _load_checked(args.input)
    _write(args.output, export_lp(build_standard_form(inst)))
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = _load_checked(args.input)
    alloc, claimed = load_allocation(args.alloc)
    report = check_feasibility(inst, alloc)
    sf = build_standard_form(inst)
    ver = verify_solution(sf, encode_allocation(alloc, sf.index))
    problems = [f"{v.kind.value} on machine {v.machine} (slack {v.slack})" for v in report.violations]
    problems += [f"row {v.label}: lhs {v.lhs} {v.sense.value} {v.rhs} violated" for v in ver.row_violations]
    objective = objective_value(inst, alloc)
    if claimed is not None and claimed != objective:
        problems.append(f"claimed objective {claimed} != computed {objective}")
    for p in problems:
        print(p)
    print(json.dumps({"ok": not problems, "objective": objective}))
    return EXIT_OK if not problems else EXIT_INFEASIBLE


def cmd_dims(args) -> int:
    m, n = dimensions(args.components, args.machines)
    print(f"M={m} N={n}")
    return EXIT_OK


def cmd_bench(args) -> int:
    suite = benchmark.load_suite(args.suite)
    solvers = [s.strip() for s in args.solvers.split(",") if s.strip()]
    rows = benchmark.run_benchmark(
        suite, solvers, node_limit=args.node_limit, time_limit_s=args.time_limit, jobs=args.jobs
    )
    benchmark.write_csv(rows, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ilpalloc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a seeded random instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--components", type=int, required=True)
    p.add_argument("--machines", type=int, required=True)
    for flag in ("--mem-req", "--cpu-req", "--mem-cap", "--cpu-cap", "--weight"):
        p.add_argument(flag, type=_interval, metavar="A:B")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="solve an instance")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--solver", choices=SOLVERS, default="bnb")
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--node-limit", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("export", help="write the ILP model in a solver text format")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--format", choices=("lp",), default="lp")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify", help="check an allocation file against an instance")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--alloc", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dims", help="print model dimensions M and N")
    p.add_argument("--components", type=int, required=True)
    p.add_argument("--machines", type=int, required=True)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("bench", help="benchmark solvers over a suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--solvers", default="bnb,ffd,bfd")
    p.add_argument("--node-limit", type=int)
    p.add_argument("--time-limit", type=float, help="per-run B&B time limit in seconds")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (IlpAllocError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
