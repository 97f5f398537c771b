"""Greedy first-fit / best-fit decreasing placement.

Components go in decreasing normalized size.  Machines are scanned in
ascending (energy weight, id); a closed machine is only switched on when no
open machine has room.
"""

from __future__ import annotations

import time

from ..model import Instance, allocation_from_assignment, objective_value
from .common import SolveReport, Status, decreasing_order


def _greedy(inst: Instance, best_fit: bool) -> SolveReport:
    t0 = time.perf_counter()
    J = inst.n_machines
    machines = sorted(range(J), key=lambda j: (inst.machines[j].energy_weight, j))
    res_mem = [m.mem_cap for m in inst.machines]
    res_cpu = [m.cpu_cap for m in inst.machines]
    is_open = [False] * J
    assignment = [0] * inst.n_components

    for i in decreasing_order(inst):
        mem, cpu = inst.components[i].mem_req, inst.components[i].cpu_req
        target = None
        if best_fit:
            fit = None
            for j in machines:
                if is_open[j] and res_mem[j] >= mem and res_cpu[j] >= cpu:
                    key = (res_mem[j] - mem, res_cpu[j] - cpu, j)
                    if fit is None or key < fit:
                        fit, target = key, j
        else:
            for j in machines:
                if is_open[j] and res_mem[j] >= mem and res_cpu[j] >= cpu:
                    target = j
                    break
        if target is None:
            for j in machines:
                if not is_open[j] and res_mem[j] >= mem and res_cpu[j] >= cpu:
                    target = j
                    break
            if target is None:
                return SolveReport(
                    Status.INFEASIBLE,
                    nodes_explored=inst.n_components,
                    elapsed_ms=(time.perf_counter() - t0) * 1e3,
                )
            is_open[target] = True
        res_mem[target] -= mem
        res_cpu[target] -= cpu
        assignment[i] = target

    alloc = allocation_from_assignment(inst, assignment)
    return SolveReport(
        Status.FEASIBLE,
        alloc,
        objective_value(inst, alloc),
        inst.n_components,
        (time.perf_counter() - t0) * 1e3,
    )


def solve_first_fit_decreasing(inst: Instance) -> SolveReport:
    return _greedy(inst, best_fit=False)


def solve_best_fit_decreasing(inst: Instance) -> SolveReport:
    return _greedy(inst, best_fit=True)
