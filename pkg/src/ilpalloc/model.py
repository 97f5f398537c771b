"""Domain types for the component-to-machine allocation problem.

Everything here works on the problem directly (who runs where, which machine
is powered on) and never looks at the matrix encoding.  The matrix side lives
in :mod:`ilpalloc.standard_form`; the two are cross-checked in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .errors import DimensionMismatch


@dataclass(frozen=True)
class Component:
    id: int
    mem_req: int
    cpu_req: int


@dataclass(frozen=True)
class Machine:
    id: int
    mem_cap: int
    cpu_cap: int
    energy_weight: int = 1

    def fits(self, comp: Component) -> bool:
        return comp.mem_req <= self.mem_cap and comp.cpu_req <= self.cpu_cap


@dataclass(frozen=True)
class Instance:
    components: tuple[Component, ...]
    machines: tuple[Machine, ...]

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def n_machines(self) -> int:
        return len(self.machines)

    @classmethod
    def from_lists(
        cls,
        components: Sequence[tuple[int, int]],
        machines: Sequence[tuple[int, ...]],
    ) -> Instance:
        """Build an instance from ``(mem, cpu)`` and ``(mem, cpu[, weight])`` tuples.

        Ids are the list positions.
        """
        comps = tuple(Component(i, int(m), int(c)) for i, (m, c) in enumerate(components))
        machs = tuple(Machine(j, *(int(v) for v in spec)) for j, spec in enumerate(machines))
        return cls(comps, machs)


@dataclass(frozen=True)
class Allocation:
    """``assignment[i]`` is the machine hosting component i; ``open[j]`` is o_j."""

    assignment: tuple[int, ...]
    open: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(int(a) for a in self.assignment))
        object.__setattr__(self, "open", tuple(bool(o) for o in self.open))


class IssueKind(str, Enum):
    NEGATIVE_VALUE = "NegativeValue"
    INVALID_WEIGHT = "InvalidWeight"
    ID_GAP = "IdGap"
    COMPONENT_FITS_NOWHERE = "ComponentFitsNowhere"


@dataclass(frozen=True)
class ValidationIssue:
    kind: IssueKind
    component: int | None = None
    machine: int | None = None
    field: str | None = None

    def __str__(self) -> str:
        where = []
        if self.component is not None:
            where.append(f"component {self.component}")
        if self.machine is not None:
            where.append(f"machine {self.machine}")
        if self.field is not None:
            where.append(f"field {self.field}")
        return f"{self.kind.value}: " + ", ".join(where)


@dataclass(frozen=True)
class ValidationResult:
    issues: tuple[ValidationIssue, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.issues

    @property
    def structurally_valid(self) -> bool:
        """True when the only problems (if any) make the model infeasible, not malformed."""
        return all(i.kind is IssueKind.COMPONENT_FITS_NOWHERE for i in self.issues)

    @property
    def fits_nowhere(self) -> tuple[int, ...]:
        return tuple(
            i.component for i in self.issues if i.kind is IssueKind.COMPONENT_FITS_NOWHERE
        )


class ViolationKind(str, Enum):
    MEM_CAPACITY = "MemCapacity"
    CPU_CAPACITY = "CpuCapacity"
    CLOSED_MACHINE_USED = "ClosedMachineUsed"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    machine: int
    slack: int


@dataclass(frozen=True)
class FeasibilityReport:
    violations: tuple[Violation, ...] = ()
    mem_slack: tuple[int, ...] = field(default=())
    cpu_slack: tuple[int, ...] = field(default=())

    @property
    def feasible(self) -> bool:
        return not self.violations


def validate_instance(inst: Instance) -> ValidationResult:
    issues: list[ValidationIssue] = []
    for pos, comp in enumerate(inst.components):
        if comp.id != pos:
            issues.append(ValidationIssue(IssueKind.ID_GAP, component=pos, field="id"))
        for name in ("mem_req", "cpu_req"):
            if getattr(comp, name) < 0:
                issues.append(ValidationIssue(IssueKind.NEGATIVE_VALUE, component=pos, field=name))
    for pos, mach in enumerate(inst.machines):
        if mach.id != pos:
            issues.append(ValidationIssue(IssueKind.ID_GAP, machine=pos, field="id"))
        for name in ("mem_cap", "cpu_cap"):
            if getattr(mach, name) < 0:
                issues.append(ValidationIssue(IssueKind.NEGATIVE_VALUE, machine=pos, field=name))
        if mach.energy_weight < 1:
            issues.append(
                ValidationIssue(IssueKind.INVALID_WEIGHT, machine=pos, field="energy_weight")
            )
    for pos, comp in enumerate(inst.components):
        if not any(m.fits(comp) for m in inst.machines):
            issues.append(ValidationIssue(IssueKind.COMPONENT_FITS_NOWHERE, component=pos))
    return ValidationResult(tuple(issues))


def _check_dims(inst: Instance, alloc: Allocation) -> None:
    if len(alloc.assignment) != inst.n_components or len(alloc.open) != inst.n_machines:
        raise DimensionMismatch(
            f"allocation has {len(alloc.assignment)} assignments / {len(alloc.open)} machines, "
            f"instance has {inst.n_components} / {inst.n_machines}"
        )


def _check_range(inst: Instance, alloc: Allocation) -> None:
    for i, j in enumerate(alloc.assignment):
        if not 0 <= j < inst.n_machines:
            raise DimensionMismatch(f"component {i} assigned to unknown machine {j}")


def objective_value(inst: Instance, alloc: Allocation) -> int:
    """Negated total energy weight of the powered-on machines (larger is better)."""
    _check_dims(inst, alloc)
    return -sum(m.energy_weight for m, on in zip(inst.machines, alloc.open) if on)


def machine_loads(inst: Instance, assignment: Sequence[int]) -> tuple[list[int], list[int]]:
    mem = [0] * inst.n_machines
    cpu = [0] * inst.n_machines
    for comp, j in zip(inst.components, assignment):
        mem[j] += comp.mem_req
        cpu[j] += comp.cpu_req
    return mem, cpu


def check_feasibility(inst: Instance, alloc: Allocation) -> FeasibilityReport:
    """Check capacity and on/off coupling for every machine.

    Slack is capacity minus load, negative when the machine is overloaded.
    """
    _check_dims(inst, alloc)
    _check_range(inst, alloc)
    mem, cpu = machine_loads(inst, alloc.assignment)
    mem_slack = tuple(m.mem_cap - load for m, load in zip(inst.machines, mem))
    cpu_slack = tuple(m.cpu_cap - load for m, load in zip(inst.machines, cpu))
    hosted = set(alloc.assignment)

    violations = []
    for j in range(inst.n_machines):
        if mem_slack[j] < 0:
            violations.append(Violation(ViolationKind.MEM_CAPACITY, j, mem_slack[j]))
        if cpu_slack[j] < 0:
            violations.append(Violation(ViolationKind.CPU_CAPACITY, j, cpu_slack[j]))
        if j in hosted and not alloc.open[j]:
            # slack here is the number of components sitting on the closed machine, negated
            count = sum(1 for a in alloc.assignment if a == j)
            violations.append(Violation(ViolationKind.CLOSED_MACHINE_USED, j, -count))
    return FeasibilityReport(tuple(violations), mem_slack, cpu_slack)


def normalize(alloc: Allocation, inst: Instance) -> Allocation:
    """Same assignment, with exactly the hosting machines switched on."""
    _check_dims(inst, alloc)
    _check_range(inst, alloc)
    hosted = set(alloc.assignment)
    return Allocation(alloc.assignment, tuple(j in hosted for j in range(inst.n_machines)))


def allocation_from_assignment(inst: Instance, assignment: Sequence[int]) -> Allocation:
    return normalize(Allocation(tuple(assignment), (False,) * inst.n_machines), inst)


def total_demand(inst: Instance) -> tuple[int, int]:
    return (
        sum(c.mem_req for c in inst.components),
        sum(c.cpu_req for c in inst.components),
    )
