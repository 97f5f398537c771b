"""Exhaustive enumeration of every component-to-machine map.

This is the optimality oracle the other solvers are checked against, so it
shares nothing with them beyond the instance type.  The enumeration is split
into a Python loop over a prefix of components and a numpy block over the
remaining suffix; both run in lexicographic order, so the first optimum met
is the lexicographically smallest assignment.
"""

from __future__ import annotations

import itertools
import time

import numpy as np

from ..model import Instance, allocation_from_assignment
from .common import SolveReport, Status

DEFAULT_NODE_LIMIT = 10**7
_BLOCK_TARGET = 200_000


def _suffix_block(inst: Instance, start: int):
    J = inst.n_machines
    s = inst.n_components - start
    grids = np.indices((J,) * s).reshape(s, -1).T if s else np.zeros((1, 0), dtype=np.int64)
    mem = np.array([c.mem_req for c in inst.components[start:]], dtype=np.int64)
    cpu = np.array([c.cpu_req for c in inst.components[start:]], dtype=np.int64)
    onehot = grids[:, :, None] == np.arange(J)[None, None, :]  # (rows, s, J)
    count = onehot.sum(axis=1)
    mem_load = np.einsum("rsj,s->rj", onehot, mem)
    cpu_load = np.einsum("rsj,s->rj", onehot, cpu)
    return grids, count, mem_load, cpu_load


def solve_brute_force(inst: Instance, node_limit: int = DEFAULT_NODE_LIMIT) -> SolveReport:
    t0 = time.perf_counter()
    I, J = inst.n_components, inst.n_machines
    total = J**I
    if total > node_limit:
        return SolveReport(Status.LIMIT_EXCEEDED, elapsed_ms=(time.perf_counter() - t0) * 1e3)
    if total == 0:
        return SolveReport(Status.INFEASIBLE, elapsed_ms=(time.perf_counter() - t0) * 1e3)

    suffix_len = 0
    while suffix_len < I and J ** (suffix_len + 1) <= _BLOCK_TARGET:
        suffix_len += 1
    split = I - suffix_len
    grids, s_count, s_mem, s_cpu = _suffix_block(inst, split)

    mem_cap = np.array([m.mem_cap for m in inst.machines], dtype=np.int64)
    cpu_cap = np.array([m.cpu_cap for m in inst.machines], dtype=np.int64)
    weight = np.array([m.energy_weight for m in inst.machines], dtype=np.int64)
    prefix_comps = inst.components[:split]

    best_cost = None
    best_assignment = None
    for prefix in itertools.product(range(J), repeat=split):
        p_mem = np.zeros(J, dtype=np.int64)
        p_cpu = np.zeros(J, dtype=np.int64)
        p_count = np.zeros(J, dtype=np.int64)
        for comp, j in zip(prefix_comps, prefix):
            p_mem[j] += comp.mem_req
            p_cpu[j] += comp.cpu_req
            p_count[j] += 1
        ok = np.all(s_mem + p_mem <= mem_cap, axis=1) & np.all(s_cpu + p_cpu <= cpu_cap, axis=1)
        if not ok.any():
            continue
        cost = ((s_count + p_count) > 0).astype(np.int64) @ weight
        cost = np.where(ok, cost, np.iinfo(np.int64).max)
        k = int(np.argmin(cost))
        if best_cost is None or cost[k] < best_cost:
            best_cost = int(cost[k])
            best_assignment = tuple(prefix) + tuple(int(v) for v in grids[k])

    elapsed = (time.perf_counter() - t0) * 1e3
    if best_assignment is None:
        return SolveReport(Status.INFEASIBLE, nodes_explored=total, elapsed_ms=elapsed)
    alloc = allocation_from_assignment(inst, best_assignment)
    return SolveReport(Status.OPTIMAL, alloc, -best_cost, total, elapsed)
