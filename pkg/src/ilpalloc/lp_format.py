"""CPLEX LP text writer, plus a reader for files produced by the writer.

The reader only understands our own output (one constraint per line, integer
coefficients, ``d_<i>_<j>`` / ``o_<j>`` names); it is not a general LP parser.
"""

from __future__ import annotations

import re

from .errors import InvalidInput
from .standard_form import Sense, SparseRow, StandardForm, VariableIndex


def _format_terms(entries, index: VariableIndex) -> str:
    parts = []
    for col, coef in entries:
        mag = abs(coef)
        body = index.name(col) if mag == 1 else f"{mag} {index.name(col)}"
        if not parts:
            parts.append(f"- {body}" if coef < 0 else body)
        else:
            parts.append(f"{'-' if coef < 0 else '+'} {body}")
    return " ".join(parts)


def export_lp(sf: StandardForm) -> str:
    idx = sf.index
    lines = ["Maximize"]
    obj = _format_terms([(k, v) for k, v in enumerate(sf.c) if v != 0], idx)
    lines.append(f"obj: {obj}" if obj else "obj:")
    lines.append("Subject To")
    for row in sf.rows:
        lhs = _format_terms(row.entries, idx) or "0"
        lines.append(f"{row.label}: {lhs} {row.sense.value} {row.rhs}")
    lines.append("Bounds")
    lines.append("Binaries")
    lines.extend(idx.names())
    lines.append("End")
    return "\n".join(lines) + "\n"


_VAR = re.compile(r"^(?:d_(\d+)_(\d+)|o_(\d+))$")
_INT = re.compile(r"^\d+$")


def _parse_terms(tokens: list[str], names: dict[str, int]) -> list[tuple[int, int]]:
    entries: dict[int, int] = {}
    sign, mag = 1, None
    for tok in tokens:
        if tok in "+-":
            sign = -1 if tok == "-" else 1
        elif _INT.match(tok):
            mag = int(tok)
        elif tok in names:
            col = names[tok]
            entries[col] = entries.get(col, 0) + sign * (1 if mag is None else mag)
            sign, mag = 1, None
        else:
            raise InvalidInput(f"unexpected token {tok!r}")
    if mag not in (None, 0):
        raise InvalidInput("dangling constant in linear expression")
    return sorted(entries.items())


def parse_lp(text: str) -> StandardForm:
    section = None
    obj_tokens: list[str] = []
    raw_rows: list[tuple[str, list[str], str, int]] = []
    binaries: list[str] = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line in ("Maximize", "Subject To", "Bounds", "Binaries", "End"):
            section = line
            continue
        if section == "Maximize":
            label, _, rest = line.partition(":")
            if label.strip() != "obj":
                raise InvalidInput(f"unexpected objective line {line!r}")
            obj_tokens = rest.split()
        elif section == "Subject To":
            label, _, rest = line.partition(":")
            tokens = rest.split()
            if len(tokens) < 3 or tokens[-2] not in ("<=", "="):
                raise InvalidInput(f"cannot read constraint {line!r}")
            raw_rows.append((label.strip(), tokens[:-2], tokens[-2], int(tokens[-1])))
        elif section == "Binaries":
            binaries.extend(line.split())
        else:
            raise InvalidInput(f"unexpected line {line!r} in section {section}")

    J = 0
    for name in binaries:
        m = _VAR.match(name)
        if m is None:
            raise InvalidInput(f"unknown variable {name!r}")
        if m.group(3) is not None:
            J += 1
    I = sum(1 for label, *_ in raw_rows if label.startswith("assign_"))
    idx = VariableIndex(I, J)
    names = {name: col for col, name in enumerate(idx.names())}
    if sorted(binaries) != sorted(names):
        raise InvalidInput("Binaries section does not match the constraint structure")

    c = [0] * idx.n_columns
    for col, coef in _parse_terms(obj_tokens, names):
        c[col] = coef
    rows = tuple(
        SparseRow.build(_parse_terms(tokens, names), Sense(sense), rhs, label)
        for label, tokens, sense, rhs in raw_rows
    )
    return StandardForm(tuple(c), rows, idx)
