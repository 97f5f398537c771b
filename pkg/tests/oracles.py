"""Independent reference computations used by the tests.

Nothing here imports the solvers or the matrix builder; everything is
recomputed from the raw instance fields by direct enumeration.
"""

import itertools
import math


def loads_by_scan(inst, assignment):
    mem = [0] * len(inst.machines)
    cpu = [0] * len(inst.machines)
    for i, j in enumerate(assignment):
        mem[j] += inst.components[i].mem_req
        cpu[j] += inst.components[i].cpu_req
    return mem, cpu


def assignment_feasible(inst, assignment):
    mem, cpu = loads_by_scan(inst, assignment)
    return all(
        mem[j] <= m.mem_cap and cpu[j] <= m.cpu_cap for j, m in enumerate(inst.machines)
    )


def enumerate_optimum(inst):
    """(best objective, lexicographically first optimal assignment) or (None, None)."""
    best, arg = None, None
    J = len(inst.machines)
    for assignment in itertools.product(range(J), repeat=len(inst.components)):
        if not assignment_feasible(inst, assignment):
            continue
        value = -sum(inst.machines[j].energy_weight for j in set(assignment))
        if best is None or value > best:
            best, arg = value, assignment
    return best, arg


def min_completion_weight(inst, order, prefix):
    """Least weight of machines newly opened by any feasible completion of ``prefix``.

    ``prefix[k]`` is the machine of component ``order[k]``.  Returns inf when
    no feasible completion exists.
    """
    J = len(inst.machines)
    rest = order[len(prefix):]
    already = set(prefix)
    best = math.inf
    for tail in itertools.product(range(J), repeat=len(rest)):
        assignment = [0] * len(inst.components)
        for i, j in zip(order, tuple(prefix) + tail):
            assignment[i] = j
        if not assignment_feasible(inst, assignment):
            continue
        extra = sum(inst.machines[j].energy_weight for j in set(tail) - already)
        best = min(best, extra)
    return best


def count_nonzeros_by_family(inst):
    """Stored coefficients per row family, counted from the construction rules."""
    I, J = len(inst.components), len(inst.machines)
    mem_rows = sum(
        sum(1 for c in inst.components if c.mem_req != 0) + (1 if m.mem_cap != 0 else 0)
        for m in inst.machines
    )
    cpu_rows = sum(
        sum(1 for c in inst.components if c.cpu_req != 0) + (1 if m.cpu_cap != 0 else 0)
        for m in inst.machines
    )
    bound_rows = I * J + J
    assign_rows = I * J
    return mem_rows + cpu_rows + bound_rows + assign_rows
