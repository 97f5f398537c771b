"""JSON documents for instances and allocations."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InvalidInput
from .model import Allocation, Component, Instance, Machine


def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInput(f"{what} must be an integer, got {value!r}")
    return value


def instance_to_dict(inst: Instance, meta: dict | None = None) -> dict:
    doc = {
        "components": [{"mem": c.mem_req, "cpu": c.cpu_req} for c in inst.components],
        "machines": [
            {"mem": m.mem_cap, "cpu": m.cpu_cap, "weight": m.energy_weight} for m in inst.machines
        ],
    }
    if meta is not None:
        doc["meta"] = meta
    return doc


def instance_from_dict(doc) -> Instance:
    try:
        comps = tuple(
            Component(i, _as_int(c["mem"], f"components[{i}].mem"), _as_int(c["cpu"], f"components[{i}].cpu"))
            for i, c in enumerate(doc["components"])
        )
        machs = tuple(
            Machine(
                j,
                _as_int(m["mem"], f"machines[{j}].mem"),
                _as_int(m["cpu"], f"machines[{j}].cpu"),
                _as_int(m.get("weight", 1), f"machines[{j}].weight"),
            )
            for j, m in enumerate(doc["machines"])
        )
    except (KeyError, TypeError, AttributeError) as exc:
        raise InvalidInput(f"malformed instance document: {exc!r}") from exc
    return Instance(comps, machs)


def dumps_instance(inst: Instance, meta: dict | None = None) -> str:
    return json.dumps(instance_to_dict(inst, meta), indent=2) + "\n"


def load_instance(path) -> Instance:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: not valid JSON ({exc})") from exc
    return instance_from_dict(doc)


def allocation_to_dict(alloc: Allocation, objective: int) -> dict:
    return {"assignment": list(alloc.assignment), "open": list(alloc.open), "objective": objective}


def allocation_from_dict(doc) -> tuple[Allocation, int | None]:
    try:
        assignment = [_as_int(a, "assignment entry") for a in doc["assignment"]]
        is_open = doc["open"]
        if not all(isinstance(o, bool) for o in is_open):
            raise InvalidInput("open entries must be booleans")
        objective = doc.get("objective")
    except (KeyError, TypeError, AttributeError) as exc:
        raise InvalidInput(f"malformed allocation document: {exc!r}") from exc
    return Allocation(tuple(assignment), tuple(is_open)), objective


def load_allocation(path) -> tuple[Allocation, int | None]:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: not valid JSON ({exc})") from exc
    return allocation_from_dict(doc)
