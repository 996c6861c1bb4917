"""Delimited-output formatting and figure rendering."""

import json

import numpy as np
import pytest

from multicopy_usd import lifted_curve, trine_table
from multicopy_usd.report import (
    format_cell,
    record_text,
    render_lifted_curve,
    render_trine_table,
    table_text,
)

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def test_cell_formatting_carries_full_precision():
    assert format_cell(1 / 3) == "0.33333333333333331"
    assert format_cell(0.75) == "0.75"
    assert format_cell(7) == "7"
    assert format_cell(True) == "true"
    assert format_cell("plain") == "plain"
    assert format_cell([1, "a"]) == '[1,"a"]'


def test_csv_round_trips_through_float_parsing():
    value = np.nextafter(0.75, 1.0)
    assert float(format_cell(value)) == value


def test_table_text_csv_and_json():
    rows = [(1, 0.5), (2, 0.25)]
    csv_text = table_text(("a", "b"), rows, "csv")
    assert csv_text == "a,b\n1,0.5\n2,0.25\n"
    payload = json.loads(table_text(("a", "b"), rows, "json"))
    assert payload["schema"] == 1
    assert payload["rows"][1] == {"a": 2, "b": 0.25}
    with pytest.raises(ValueError):
        table_text(("a",), rows, "xml")


def test_record_text_formats():
    record = {"schema": 1, "value": 0.125, "nested": {"k": 2}}
    payload = json.loads(record_text(record, "json"))
    assert payload == record
    csv_text = record_text(record, "csv")
    lines = csv_text.splitlines()
    assert lines[0] == "schema,value,nested"
    assert lines[1] == '1,0.125,"{""k"":2}"'


def test_curve_figure_renders_png(tmp_path):
    grid, values = lifted_curve(51)
    target = tmp_path / "curve.png"
    render_lifted_curve(target, grid, values)
    assert target.read_bytes()[:8] == PNG_MAGIC


def test_table_figure_renders_png(tmp_path):
    target = tmp_path / "table.png"
    render_trine_table(target, trine_table(8))
    assert target.read_bytes()[:8] == PNG_MAGIC
