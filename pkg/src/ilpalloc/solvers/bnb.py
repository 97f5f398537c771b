"""Exact depth-first branch and bound over component placements.

Components are placed one at a time (largest first).  Each node carries the
weight of the machines opened so far; a node is cut when that weight plus an
admissible estimate of the weight still to be opened cannot beat the
incumbent.  The estimate covers the demand that no longer fits in the open
machines with the cheapest closed capacity, allowing the last machine to be
used fractionally, separately for memory and CPU.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

from ..errors import InvalidInput
from ..model import Instance, allocation_from_assignment, total_demand, validate_instance
from .common import SolveReport, Status, decreasing_order

DEFAULT_NODE_LIMIT = 10**7
INFEASIBLE_BOUND = math.inf


@dataclass(frozen=True)
class SearchState:
    """A node of the search: the first ``next_component`` entries of ``order`` are placed."""

    order: tuple[int, ...]
    next_component: int
    partial_assignment: tuple[int, ...]
    open: tuple[bool, ...]
    open_weight: int
    residual_mem: tuple[int, ...]
    residual_cpu: tuple[int, ...]
    remaining_mem: int
    remaining_cpu: int

    @classmethod
    def root(cls, inst: Instance, order=None) -> SearchState:
        order = tuple(range(inst.n_components) if order is None else order)
        mem, cpu = total_demand(inst)
        return cls(
            order,
            0,
            (),
            (False,) * inst.n_machines,
            0,
            tuple(m.mem_cap for m in inst.machines),
            tuple(m.cpu_cap for m in inst.machines),
            mem,
            cpu,
        )

    def place(self, inst: Instance, machine: int) -> SearchState:
        """Child state with the next component put on ``machine`` (opened if needed).

        Residuals may go negative; the caller decides whether that is allowed.
        """
        comp = inst.components[self.order[self.next_component]]
        was_open = self.open[machine]
        res_mem = list(self.residual_mem)
        res_cpu = list(self.residual_cpu)
        res_mem[machine] -= comp.mem_req
        res_cpu[machine] -= comp.cpu_req
        is_open = list(self.open)
        is_open[machine] = True
        return SearchState(
            self.order,
            self.next_component + 1,
            self.partial_assignment + (machine,),
            tuple(is_open),
            self.open_weight + (0 if was_open else inst.machines[machine].energy_weight),
            tuple(res_mem),
            tuple(res_cpu),
            self.remaining_mem - comp.mem_req,
            self.remaining_cpu - comp.cpu_req,
        )


def _ranked(inst: Instance, attr: str) -> list[int]:
    """Machines by decreasing capacity per unit weight, ties by id."""
    return sorted(
        range(inst.n_machines),
        key=lambda j: (-Fraction(getattr(inst.machines[j], attr), inst.machines[j].energy_weight), j),
    )


def _cover_cost(deficit, ranked, caps, weights, is_open):
    """Least fractional weight of closed machines whose capacity covers ``deficit``, rounded up."""
    if deficit <= 0:
        return 0
    whole = 0
    for j in ranked:
        if is_open[j] or caps[j] == 0:
            continue
        if caps[j] >= deficit:
            # whole + deficit * w / cap, rounded up in exact integer arithmetic
            return whole - (-deficit * weights[j] // caps[j])
        whole += weights[j]
        deficit -= caps[j]
    return INFEASIBLE_BOUND


def lower_bound_extra(state: SearchState, inst: Instance, _ranked_cache=None):
    """Admissible lower bound on the weight any feasible completion still has to open.

    Returns an int, or ``INFEASIBLE_BOUND`` (infinity) when the closed machines
    cannot absorb the leftover demand of some resource.  The fractional cover
    is computed exactly and rounded up, which stays admissible since every
    completion opens a whole number of weight units.
    """
    if _ranked_cache is None:
        _ranked_cache = (_ranked(inst, "mem_cap"), _ranked(inst, "cpu_cap"))
    weights = [m.energy_weight for m in inst.machines]
    bound = 0
    for ranked, residual, remaining, attr in (
        (_ranked_cache[0], state.residual_mem, state.remaining_mem, "mem_cap"),
        (_ranked_cache[1], state.residual_cpu, state.remaining_cpu, "cpu_cap"),
    ):
        spare = sum(max(0, r) for r, on in zip(residual, state.open) if on)
        caps = [getattr(m, attr) for m in inst.machines]
        bound = max(bound, _cover_cost(remaining - spare, ranked, caps, weights, state.open))
    return bound


@dataclass(frozen=True)
class BnbOptions:
    symmetry_breaking: bool = True
    node_limit: int = DEFAULT_NODE_LIMIT
    time_limit_s: float | None = None


def solve_branch_and_bound(inst: Instance, options: BnbOptions | None = None) -> SolveReport:
    opts = options or BnbOptions()
    t0 = time.perf_counter()

    def elapsed():
        return (time.perf_counter() - t0) * 1e3

    check = validate_instance(inst)
    if not check.structurally_valid:
        raise InvalidInput("; ".join(str(i) for i in check.issues))
    if check.fits_nowhere:
        return SolveReport(Status.INFEASIBLE, elapsed_ms=elapsed())

    I, J = inst.n_components, inst.n_machines
    order = decreasing_order(inst)
    comps = inst.components
    mem_req = [comps[i].mem_req for i in order]
    cpu_req = [comps[i].cpu_req for i in order]
    mem_cap = [m.mem_cap for m in inst.machines]
    cpu_cap = [m.cpu_cap for m in inst.machines]
    weight = [m.energy_weight for m in inst.machines]
    rank_mem, rank_cpu = _ranked(inst, "mem_cap"), _ranked(inst, "cpu_cap")
    closed_order = sorted(range(J), key=lambda j: (weight[j], j))

    # previous machine with identical (mem, cpu, weight), or -1
    twin_before = [-1] * J
    if opts.symmetry_breaking:
        last_seen: dict[tuple[int, int, int], int] = {}
        for j, m in enumerate(inst.machines):
            key = (m.mem_cap, m.cpu_cap, m.energy_weight)
            twin_before[j] = last_seen.get(key, -1)
            last_seen[key] = j

    # suffix sums of demand in search order
    rem_mem = [0] * (I + 1)
    rem_cpu = [0] * (I + 1)
    for k in range(I - 1, -1, -1):
        rem_mem[k] = rem_mem[k + 1] + mem_req[k]
        rem_cpu[k] = rem_cpu[k + 1] + cpu_req[k]

    res_mem = mem_cap[:]
    res_cpu = cpu_cap[:]
    is_open = [False] * J
    placed = [0] * I
    best_cost = sum(weight) + 1
    best_placed: list[int] | None = None
    nodes = 0
    stopped = False

    def bound(k: int, spare_mem: int, spare_cpu: int):
        b = _cover_cost(rem_mem[k] - spare_mem, rank_mem, mem_cap, weight, is_open)
        if b == INFEASIBLE_BOUND:
            return b
        return max(b, _cover_cost(rem_cpu[k] - spare_cpu, rank_cpu, cpu_cap, weight, is_open))

    def dfs(k: int, cost: int, spare_mem: int, spare_cpu: int):
        # spare_* = summed residual capacity over open machines
        nonlocal best_cost, best_placed, nodes, stopped
        nodes += 1
        if nodes > opts.node_limit:
            stopped = True
            return
        if opts.time_limit_s is not None and nodes % 1024 == 0:
            if time.perf_counter() - t0 > opts.time_limit_s:
                stopped = True
                return
        if k == I:
            if cost < best_cost:
                best_cost = cost
                best_placed = placed[:]
            return
        if cost + bound(k, spare_mem, spare_cpu) >= best_cost:
            return
        m, c = mem_req[k], cpu_req[k]
        for j in range(J):
            if is_open[j] and res_mem[j] >= m and res_cpu[j] >= c:
                res_mem[j] -= m
                res_cpu[j] -= c
                placed[k] = j
                dfs(k + 1, cost, spare_mem - m, spare_cpu - c)
                res_mem[j] += m
                res_cpu[j] += c
                if stopped:
                    return
        for j in closed_order:
            if is_open[j] or mem_cap[j] < m or cpu_cap[j] < c:
                continue
            if twin_before[j] >= 0 and not is_open[twin_before[j]]:
                continue
            if cost + weight[j] >= best_cost:
                # closed_order is sorted by weight, so no later machine can do better
                break
            is_open[j] = True
            res_mem[j] -= m
            res_cpu[j] -= c
            placed[k] = j
            dfs(k + 1, cost + weight[j], spare_mem + res_mem[j], spare_cpu + res_cpu[j])
            res_mem[j] += m
            res_cpu[j] += c
            is_open[j] = False
            if stopped:
                return

    dfs(0, 0, 0, 0)
    # the node that tripped the limit was not explored
    nodes = min(nodes, opts.node_limit)

    if best_placed is None:
        status = Status.LIMIT_EXCEEDED if stopped else Status.INFEASIBLE
        return SolveReport(status, nodes_explored=nodes, elapsed_ms=elapsed())
    assignment = [0] * I
    for k, i in enumerate(order):
        assignment[i] = best_placed[k]
    alloc = allocation_from_assignment(inst, assignment)
    status = Status.FEASIBLE if stopped else Status.OPTIMAL
    return SolveReport(status, alloc, -best_cost, nodes, elapsed())
