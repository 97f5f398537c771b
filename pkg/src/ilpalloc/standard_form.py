"""Numeric ILP encoding ``maximize c.x  s.t.  A x (<=|=) b, x binary``.

Column layout: the d block comes first in component-major order
(``column(d_ij) = i*J + j``), followed by the o block (``column(o_j) = I*J + j``).

Row layout, in order:

* ``mem_<j>``      sum_i mem_i d_ij - memcap_j o_j <= 0
* ``cpu_<j>``      sum_i cpu_i d_ij - cpucap_j o_j <= 0
* ``ub_d_<i>_<j>`` d_ij <= 1
* ``ub_o_<j>``     o_j <= 1
* ``assign_<i>``   sum_j d_ij = 1

Rows are stored sparsely; zero coefficients are never kept.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import DimensionMismatch, NonBinaryEntry, NotExactlyOneAssignment
from .model import Allocation, Instance, normalize


class Sense(str, Enum):
    LE = "<="
    EQ = "="


@dataclass(frozen=True)
class VariableIndex:
    I: int
    J: int

    @property
    def n_columns(self) -> int:
        return self.I * self.J + self.J

    def d(self, i: int, j: int) -> int:
        return i * self.J + j

    def o(self, j: int) -> int:
        return self.I * self.J + j

    def name(self, col: int) -> str:
        if col < self.I * self.J:
            i, j = divmod(col, self.J)
            return f"d_{i}_{j}"
        return f"o_{col - self.I * self.J}"

    def names(self) -> list[str]:
        return [self.name(k) for k in range(self.n_columns)]


@dataclass(frozen=True)
class SparseRow:
    entries: tuple[tuple[int, int], ...]
    sense: Sense
    rhs: int
    label: str

    @classmethod
    def build(cls, entries, sense: Sense, rhs: int, label: str) -> SparseRow:
        kept = tuple(sorted((int(col), int(coef)) for col, coef in entries if coef != 0))
        cols = [col for col, _ in kept]
        if len(set(cols)) != len(cols):
            raise ValueError(f"row {label} has duplicate columns")
        return cls(kept, sense, int(rhs), label)

    def lhs(self, x: Sequence[int]) -> int:
        return sum(coef * x[col] for col, coef in self.entries)

    def satisfied_by(self, x: Sequence[int]) -> bool:
        value = self.lhs(x)
        return value == self.rhs if self.sense is Sense.EQ else value <= self.rhs


@dataclass(frozen=True)
class StandardForm:
    c: tuple[int, ...]
    rows: tuple[SparseRow, ...]
    index: VariableIndex

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.c)

    @property
    def binary(self) -> tuple[bool, ...]:
        return (True,) * len(self.c)

    def dense(self):
        """Dense ``(c, A, b)`` as numpy arrays; for inspection and small models only."""
        import numpy as np

        m, n = self.shape
        A = np.zeros((m, n), dtype=np.int64)
        for r, row in enumerate(self.rows):
            for col, coef in row.entries:
                A[r, col] = coef
        b = np.array([row.rhs for row in self.rows], dtype=np.int64)
        return np.array(self.c, dtype=np.int64), A, b


def dimensions(I: int, J: int) -> tuple[int, int]:
    """Row and column counts ``(M, N)`` of the model for I components and J machines."""
    if I < 0 or J < 0:
        raise ValueError("counts must be non-negative")
    return 2 * J + I * J + J + I, I * J + J


def build_standard_form(inst: Instance) -> StandardForm:
    I, J = inst.n_components, inst.n_machines
    idx = VariableIndex(I, J)

    c = [0] * idx.n_columns
    for m in inst.machines:
        c[idx.o(m.id)] = -m.energy_weight

    rows: list[SparseRow] = []
    for m in inst.machines:
        entries = [(idx.d(comp.id, m.id), comp.mem_req) for comp in inst.components]
        entries.append((idx.o(m.id), -m.mem_cap))
        rows.append(SparseRow.build(entries, Sense.LE, 0, f"mem_{m.id}"))
    for m in inst.machines:
        entries = [(idx.d(comp.id, m.id), comp.cpu_req) for comp in inst.components]
        entries.append((idx.o(m.id), -m.cpu_cap))
        rows.append(SparseRow.build(entries, Sense.LE, 0, f"cpu_{m.id}"))
    for i in range(I):
        for j in range(J):
            rows.append(SparseRow.build([(idx.d(i, j), 1)], Sense.LE, 1, f"ub_d_{i}_{j}"))
    for j in range(J):
        rows.append(SparseRow.build([(idx.o(j), 1)], Sense.LE, 1, f"ub_o_{j}"))
    for i in range(I):
        entries = [(idx.d(i, j), 1) for j in range(J)]
        rows.append(SparseRow.build(entries, Sense.EQ, 1, f"assign_{i}"))

    return StandardForm(tuple(c), tuple(rows), idx)


def as_inequalities(sf: StandardForm) -> StandardForm:
    """Pure ``<=`` view: every equality row becomes a ``<=`` row and a negated ``<=`` row.

    The second copy is labelled ``<label>_ge``.
    """
    rows: list[SparseRow] = []
    for row in sf.rows:
        if row.sense is Sense.EQ:
            rows.append(SparseRow(row.entries, Sense.LE, row.rhs, row.label))
            neg = tuple((col, -coef) for col, coef in row.entries)
            rows.append(SparseRow(neg, Sense.LE, -row.rhs, row.label + "_ge"))
        else:
            rows.append(row)
    return StandardForm(sf.c, tuple(rows), sf.index)


def nonzero_count(sf: StandardForm) -> int:
    return sum(len(row.entries) for row in sf.rows)


def density(sf: StandardForm) -> float:
    m, n = sf.shape
    return nonzero_count(sf) / (m * n) if m and n else 0.0


def encode_allocation(alloc: Allocation, index: VariableIndex) -> list[int]:
    if len(alloc.assignment) != index.I or len(alloc.open) != index.J:
        raise DimensionMismatch("allocation does not match the variable index")
    x = [0] * index.n_columns
    for i, j in enumerate(alloc.assignment):
        if not 0 <= j < index.J:
            raise DimensionMismatch(f"component {i} assigned to unknown machine {j}")
        x[index.d(i, j)] = 1
    for j, on in enumerate(alloc.open):
        x[index.o(j)] = int(on)
    return x


def decode_solution(x: Sequence[int], index: VariableIndex, inst: Instance) -> Allocation:
    """Read the allocation out of an x vector; open-but-empty machines are closed."""
    if len(x) != index.n_columns:
        raise DimensionMismatch(f"x has length {len(x)}, expected {index.n_columns}")
    for col, v in enumerate(x):
        if v not in (0, 1):
            raise NonBinaryEntry(f"x[{col}] ({index.name(col)}) = {v}")
    assignment = []
    for i in range(index.I):
        block = [x[index.d(i, j)] for j in range(index.J)]
        if sum(block) != 1:
            raise NotExactlyOneAssignment(f"component {i} d-block sums to {sum(block)}")
        assignment.append(block.index(1))
    raw = Allocation(tuple(assignment), tuple(bool(x[index.o(j)]) for j in range(index.J)))
    return normalize(raw, inst)


@dataclass(frozen=True)
class RowViolation:
    label: str
    lhs: int
    sense: Sense
    rhs: int


@dataclass(frozen=True)
class VerificationReport:
    row_violations: tuple[RowViolation, ...]
    negative_entries: tuple[int, ...]
    nonbinary_entries: tuple[int, ...]
    objective: int

    @property
    def ok(self) -> bool:
        return not (self.row_violations or self.negative_entries or self.nonbinary_entries)


def verify_solution(sf: StandardForm, x: Sequence[int]) -> VerificationReport:
    if len(x) != len(sf.c):
        raise DimensionMismatch(f"x has length {len(x)}, expected {len(sf.c)}")
    bad_rows = tuple(
        RowViolation(row.label, row.lhs(x), row.sense, row.rhs)
        for row in sf.rows
        if not row.satisfied_by(x)
    )
    negative = tuple(k for k, v in enumerate(x) if v < 0)
    nonbinary = tuple(k for k, v in enumerate(x) if v not in (0, 1))
    objective = sum(ck * xk for ck, xk in zip(sf.c, x))
    return VerificationReport(bad_rows, negative, nonbinary, objective)


def debug_dump(sf: StandardForm) -> str:
    lines = []
    for row in sf.rows:
        terms = " ".join(f"{col}:{coef}" for col, coef in row.entries)
        lines.append(f"{row.label}: {terms} {row.sense.value} {row.rhs}")
    return "\n".join(lines) + ("\n" if lines else "")
