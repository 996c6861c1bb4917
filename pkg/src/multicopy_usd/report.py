"""Delimited output and figure rendering for the command-line reports.

CSV cells carry full double precision (17 significant digits) so downstream
plotting and regression checks are exact; JSON output carries a ``schema``
version field. Figures are rendered headlessly next to the delimited data.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence

from .trine import ORTHOGONAL_LIFT


def format_cell(value) -> str:
    """One CSV cell: ints verbatim, floats at 17 significant digits."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".17g")
    if isinstance(value, str):
        return value
    return json.dumps(value, separators=(",", ":"))


def table_text(header: Sequence[str], rows: Sequence[Sequence], fmt: str) -> str:
    """A table as CSV lines or as a JSON document with one object per row."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_cell(v) for v in row])
        return buf.getvalue()
    if fmt == "json":
        payload = {
            "schema": 1,
            "rows": [dict(zip(header, row)) for row in rows],
        }
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def record_text(record: dict, fmt: str) -> str:
    """A single record as a JSON document or a two-line CSV."""
    if fmt == "json":
        return json.dumps(record, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(record.keys())
        writer.writerow([format_cell(v) for v in record.values()])
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")


def write_text(text: str, out_path=None) -> None:
    """Write to a file, or to stdout when no path is given."""
    if out_path is None:
        print(text, end="")
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_lifted_curve(path, grid, values) -> None:
    """Line plot of the optimum success probability against the lift."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(grid, values, color="tab:blue", lw=1.6)
    ax.axvline(ORTHOGONAL_LIFT, color="0.7", lw=0.8, ls="--")
    ax.set_xlabel("lift parameter")
    ax.set_ylabel("maximum success probability")
    ax.set_xlim(0.0, 1.0)
    ax.set_ylim(0.0, 1.05)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_trine_table(path, rows) -> None:
    """Stem plot of the copy-count optimum, showing the even/odd plateaus."""
    plt = _pyplot()
    copies = [row[0] for row in rows]
    p_max = [row[2] for row in rows]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.step(copies, p_max, where="post", color="0.75", lw=0.9)
    ax.plot(copies, p_max, "o", color="tab:blue", ms=4.5)
    ax.set_xlabel("copies")
    ax.set_ylabel("maximum success probability")
    ax.set_ylim(0.0, 1.05)
    ax.set_xticks(copies)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
