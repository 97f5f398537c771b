from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..model import Allocation, Instance


class Status(str, Enum):
    OPTIMAL = "Optimal"
    FEASIBLE = "Feasible"
    INFEASIBLE = "Infeasible"
    LIMIT_EXCEEDED = "LimitExceeded"


@dataclass(frozen=True)
class SolveReport:
    status: Status
    allocation: Allocation | None = None
    objective: int | None = None
    nodes_explored: int = 0
    elapsed_ms: float = 0.0

    @property
    def has_solution(self) -> bool:
        return self.allocation is not None

    def without_timing(self) -> SolveReport:
        return SolveReport(self.status, self.allocation, self.objective, self.nodes_explored, 0.0)


def size_keys(inst: Instance) -> list[int | float]:
    """Per-component size: max of mem and cpu demand, each relative to the average capacity.

    ``max(mem / mem_total, cpu / cpu_total)`` scaled by ``mem_total * cpu_total``,
    which keeps the ordering exact in integers.  (Averages divide both totals by
    the same machine count, so that factor drops out.)  A positive demand
    against zero total capacity ranks first.
    """
    mem_total = sum(m.mem_cap for m in inst.machines)
    cpu_total = sum(m.cpu_cap for m in inst.machines)
    # a zero total only meets zero demand (else inf below); 1 keeps the other term intact
    mem_scale, cpu_scale = mem_total or 1, cpu_total or 1
    keys: list[int | float] = []
    for c in inst.components:
        if (mem_total == 0 and c.mem_req > 0) or (cpu_total == 0 and c.cpu_req > 0):
            keys.append(float("inf"))
        else:
            keys.append(max(c.mem_req * cpu_scale, c.cpu_req * mem_scale))
    return keys


def decreasing_order(inst: Instance) -> list[int]:
    keys = size_keys(inst)
    return sorted(range(inst.n_components), key=lambda i: (-keys[i], i))
