"""Run solvers over instance suites and tabulate optimality gap against runtime."""

from __future__ import annotations

import csv
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .generator import GeneratorParams, generate
from .io import instance_from_dict, load_instance
from .model import Instance
from .solvers import EXACT_SOLVERS, SOLVERS, SolveReport, Status, run_solver

CSV_HEADER = ("instance", "solver", "status", "objective", "gap", "nodes", "elapsed_ms")
SUITE_SEED_STRIDE = 1000


@dataclass(frozen=True)
class BenchmarkRow:
    instance: str
    solver: str
    status: Status
    objective: int | None
    gap: int | None
    nodes: int
    elapsed_ms: float

    def as_csv(self) -> list[str]:
        return [
            self.instance,
            self.solver,
            self.status.value,
            "" if self.objective is None else str(self.objective),
            "" if self.gap is None else str(self.gap),
            str(self.nodes),
            f"{self.elapsed_ms:.3f}",
        ]


def _run_pair(args) -> tuple[str, str, SolveReport]:
    inst_id, inst, solver, node_limit, time_limit_s = args
    report = run_solver(solver, inst, node_limit=node_limit, time_limit_s=time_limit_s)
    return inst_id, solver, report


def run_benchmark(
    instances: Sequence[tuple[str, Instance]],
    solvers: Sequence[str],
    node_limit: int | None = None,
    time_limit_s: float | None = None,
    jobs: int = 1,
) -> list[BenchmarkRow]:
    """One row per (instance, solver), sorted by instance id then solver name.

    Gaps are measured against the first exact solver in ``solvers`` (``bnb``
    before ``brute``); if none is listed, branch and bound is run as a hidden
    reference.  A gap is left empty when the reference did not prove
    optimality or the row has no objective.
    """
    for s in solvers:
        if s not in SOLVERS:
            raise ValueError(f"unknown solver {s!r}")
    reference = next((s for s in EXACT_SOLVERS if s in solvers), None)
    to_run = list(solvers) if reference else list(solvers) + ["bnb"]

    tasks = [(iid, inst, s, node_limit, time_limit_s) for iid, inst in instances for s in to_run]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_pair, tasks))
    else:
        results = [_run_pair(t) for t in tasks]

    by_pair = {(iid, s): rep for iid, s, rep in results}
    rows = []
    for iid, _ in instances:
        ref = by_pair[(iid, reference or "bnb")]
        exact = ref.objective if ref.status is Status.OPTIMAL else None
        for s in solvers:
            rep = by_pair[(iid, s)]
            gap = None
            if exact is not None and rep.objective is not None:
                gap = exact - rep.objective
            rows.append(
                BenchmarkRow(iid, s, rep.status, rep.objective, gap, rep.nodes_explored, rep.elapsed_ms)
            )
    rows.sort(key=lambda r: (r.instance, r.solver))
    return rows


def write_csv(rows: Iterable[BenchmarkRow], path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(row.as_csv())


def load_suite(path) -> list[tuple[str, Instance]]:
    """Read a suite document.

    ``{"instances": [{"id": .., "file": ..} | {"id": .., "instance": {..}}],
    "generate": {"count": n, "seed": s, "components": I, "machines": J, ...ranges}}``

    Either key may be omitted.  Files are resolved relative to the suite.
    Generated instance k uses seed ``s + 1000 * k``.
    """
    path = Path(path)
    doc = json.loads(path.read_text())
    suite: list[tuple[str, Instance]] = []
    for k, entry in enumerate(doc.get("instances", [])):
        iid = str(entry.get("id", f"inst-{k:03d}"))
        if "file" in entry:
            suite.append((iid, load_instance(path.parent / entry["file"])))
        else:
            suite.append((iid, instance_from_dict(entry["instance"])))
    gen = doc.get("generate")
    if gen:
        ranges = {
            key: tuple(gen[key])
            for key in ("mem_req", "cpu_req", "mem_cap", "cpu_cap", "weight")
            if key in gen
        }
        for k in range(int(gen.get("count", 1))):
            seed = int(gen.get("seed", 0)) + SUITE_SEED_STRIDE * k
            params = GeneratorParams(seed, int(gen["components"]), int(gen["machines"]), **ranges)
            suite.append((f"gen-{k:03d}", generate(params).instance))
    return suite
