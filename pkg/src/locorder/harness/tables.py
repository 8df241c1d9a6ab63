"""Deterministic CSV / Markdown / JSON renderings of runs and grids."""

from __future__ import annotations

import csv
import io
import json

from ..bigfloat import sci
from ..driver import RunReport
from ..errors import UsageError
from .grid import GridReport

RUN_COLUMNS = ("method", "problem", "I", "delta_lambda_bar", "delta_lambda_hat",
               "delta_lambda_tilde", "delta_lambda_breve")
# summary column order: bar, tilde, hat, breve
SUMMARY_ESTIMATORS = ("bar", "tilde", "hat", "breve")


def run_row(r: RunReport) -> list[str]:
    return [r.method_id, r.problem_id, str(r.I)] + [
        sci(r.delta(e)) for e in ("bar", "hat", "tilde", "breve")]


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _markdown(header, rows) -> str:
    lines = ["| " + " | ".join(header) + " |",
             "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def render(header, rows, fmt: str) -> str:
    if fmt == "csv":
        return _csv(header, rows)
    if fmt == "markdown":
        return _markdown(header, rows)
    if fmt == "json":
        return json.dumps([dict(zip(header, row)) for row in rows], indent=1) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def emit_runs(reports: list[RunReport], fmt: str = "csv") -> str:
    if not reports:
        raise UsageError("nothing to render")
    return render(RUN_COLUMNS, [run_row(r) for r in reports], fmt)


def summary_rows(grid: GridReport) -> tuple[list[str], list[list[str]]]:
    problems = list(grid.config.problems)
    header = ["method"] + problems + [f"I({e})" for e in SUMMARY_ESTIMATORS]
    ivs = {(iv.method_id, iv.estimator): iv for iv in grid.intervals()}
    counts = grid.counts()
    rows = []
    for m in grid.config.methods:
        row = [m] + [str(counts.get(m, {}).get(p, "")) for p in problems]
        for e in SUMMARY_ESTIMATORS:
            iv = ivs.get((m, e))
            row.append("" if iv is None else f"[{sci(iv.lo, 2)}, {sci(iv.hi, 2)}]")
        rows.append(row)
    return header, rows


def emit_table(grid: GridReport, fmt: str = "csv", kind: str = "runs") -> str:
    """Render a grid as the per-run error table or the count/interval summary."""
    if kind == "runs":
        return emit_runs(grid.reports(), fmt)
    if kind == "summary":
        header, rows = summary_rows(grid)
        if not rows:
            raise UsageError("nothing to render")
        return render(header, rows, fmt)
    raise UsageError(f"unknown table kind {kind!r}")
