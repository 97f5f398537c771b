from pathlib import Path

import pytest
from hypothesis import given

from ilpalloc.errors import InvalidInput
from ilpalloc.generator import reference_instance
from ilpalloc.lp_format import export_lp, parse_lp
from ilpalloc.model import Instance
from ilpalloc.standard_form import build_standard_form

from strategies import instances

GOLDEN = Path(__file__).parent / "data" / "golden_1x1.lp"


def test_golden_one_by_one(one_by_one):
    text = export_lp(build_standard_form(one_by_one))
    assert text == GOLDEN.read_text()
    assert "mem_0: 3 d_0_0 - 4 o_0 <= 0" in text.splitlines()
    assert "assign_0: d_0_0 = 1" in text.splitlines()


def test_empty_instance():
    text = export_lp(build_standard_form(Instance((), ())))
    assert text == "Maximize\nobj:\nSubject To\nBounds\nBinaries\nEnd\n"


def test_reference_objective_line():
    lines = export_lp(build_standard_form(reference_instance())).splitlines()
    assert lines[1] == "obj: - o_0 - o_1 - o_2 - o_3 - o_4"


def test_weights_and_empty_rows():
    inst = Instance.from_lists([(0, 0)], [(0, 5, 3)])
    text = export_lp(build_standard_form(inst))
    assert "obj: - 3 o_0" in text
    assert "mem_0: 0 <= 0" in text
    assert parse_lp(text) == build_standard_form(inst)


def test_deterministic():
    sf = build_standard_form(reference_instance())
    assert export_lp(sf) == export_lp(sf)


@given(instances(max_components=5, max_machines=4))
def test_reparse_round_trip(inst):
    sf = build_standard_form(inst)
    assert parse_lp(export_lp(sf)) == sf


def test_components_without_machines():
    sf = build_standard_form(Instance.from_lists([(1, 1), (2, 2)], []))
    assert parse_lp(export_lp(sf)) == sf


@pytest.mark.parametrize(
    "text",
    [
        "Maximize\nobj: - x_0\nSubject To\nBounds\nBinaries\nx_0\nEnd\n",
        "Maximize\nobj:\nSubject To\nrow_0: d_0_0 >= 1\nBounds\nBinaries\nEnd\n",
        "Maximize\nobj:\nGarbage\n",
    ],
)
def test_rejects_foreign_text(text):
    with pytest.raises(InvalidInput):
        parse_lp(text)
