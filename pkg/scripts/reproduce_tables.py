"""Run the default grid and compare it cell by cell with the published tables.

    python scripts/reproduce_tables.py --out results/
"""

import argparse
import json
import sys
from pathlib import Path

from locorder.harness.grid import (
    GridConfig, compare_cells, compare_counts, compare_intervals, run_grid,
)
from locorder.harness.tables import emit_table


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--eta", type=int, default=2200)
    ap.add_argument("--jobs", type=int, default=None)
    ap.add_argument("--tolerance", type=float, default=0.10)
    args = ap.parse_args(argv)

    cfg = GridConfig(eta=args.eta, output_dir=str(args.out))
    if args.jobs:
        cfg = cfg.with_overrides(parallelism=args.jobs)
    grid = run_grid(cfg)
    args.out.mkdir(parents=True, exist_ok=True)
    for fmt, ext in (("csv", "csv"), ("markdown", "md")):
        (args.out / f"runs.{ext}").write_text(emit_table(grid, fmt, "runs"))
        (args.out / f"summary.{ext}").write_text(emit_table(grid, fmt, "summary"))

    counts = compare_counts(grid)
    cells = compare_cells(grid, args.tolerance)
    ends = compare_intervals(grid, args.tolerance)
    comparison = {
        "count_mismatches": [c for c in counts if c[2] != c[3]],
        "cells": [c.__dict__ for c in cells],
        "interval_ends": [c.__dict__ for c in ends],
    }
    (args.out / "comparison.json").write_text(json.dumps(comparison, indent=1) + "\n")

    print(emit_table(grid, "markdown", "summary"))
    print(f"counts: {sum(c[2] == c[3] for c in counts)}/{len(counts)} exact")
    print(f"cells within {args.tolerance:.0%}: {sum(c.ok for c in cells)}/{len(cells)}")
    for c in cells:
        if not c.ok:
            print(f"  {c.method}/{c.problem}/{c.estimator}: {c.computed:.4g} vs {c.published:.4g}")
    print(f"interval ends within {args.tolerance:.0%}: {sum(c.ok for c in ends)}/{len(ends)}")
    for c in ends:
        if not c.ok:
            print(f"  {c.method}/{c.estimator}/{c.problem}: {c.computed:.2g} vs {c.published:.2g}")
    return 0 if all(c.ok for c in cells + ends) else 1


if __name__ == "__main__":
    sys.exit(main())
