"""Command-line entry point: ``run``, ``grid``, ``verify`` and ``root``.

Exit codes: 0 success, 1 a run was degenerate or diverged (or a check
failed), 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .driver import run
from .errors import LocOrderError, ModelInvalidError, UsageError
from .harness.grid import FORMATS, MODES, GridConfig, run_grid
from .harness.synthetic import SyntheticModel, default_models, verify_propositions
from .harness.tables import emit_runs, emit_table
from .methods import METHODS
from .problems import PROBLEMS, reference_root

log = logging.getLogger("locorder")

EXIT_OK, EXIT_RUN_FAILED, EXIT_USAGE = 0, 1, 2


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="locorder", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="one method on one problem under one stopping mode")
    p.add_argument("--method", required=True, choices=sorted(METHODS))
    p.add_argument("--problem", required=True, choices=sorted(PROBLEMS))
    p.add_argument("--mode", required=True, choices=MODES)
    p.add_argument("--eta", type=int, default=2200)
    p.add_argument("--trace", type=Path, help="write the full JSON trace here")
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.add_argument("--seeds", nargs="+", help="override starting points (x0 last)")

    g = sub.add_parser("grid", help="all methods x problems x modes")
    g.add_argument("--config", type=Path)
    g.add_argument("--eta", type=int)
    g.add_argument("--out", type=Path, dest="output_dir")
    g.add_argument("--jobs", type=int, dest="parallelism")
    g.add_argument("--format", choices=FORMATS)
    g.add_argument("--methods", nargs="+")
    g.add_argument("--problems", nargs="+")
    g.add_argument("--modes", nargs="+")

    v = sub.add_parser("verify", help="asymptotic relations on synthetic error models")
    v.add_argument("--suite", required=True, choices=["propositions"])
    v.add_argument("--models", type=Path, help="JSON list of model parameter objects")
    v.add_argument("--out", type=Path, help="write the JSON report here")

    r = sub.add_parser("root", help="reference root to a number of decimals")
    r.add_argument("--problem", required=True, choices=sorted(PROBLEMS))
    r.add_argument("--digits", type=int, required=True)
    return ap


def _cmd_run(args) -> int:
    report = run(args.method, args.problem, args.mode, args.eta,
                 seeds=tuple(args.seeds) if args.seeds else None)
    if args.trace:
        args.trace.write_text(report.to_json(indent=1) + "\n")
    sys.stdout.write(emit_runs([report], args.format))
    if not report.ok:
        log.error("%s/%s: %s %s", report.method_id, report.problem_id,
                  report.stop_reason, report.message)
        return EXIT_RUN_FAILED
    return EXIT_OK


def _cmd_grid(args) -> int:
    overrides = {k: getattr(args, k) for k in
                 ("eta", "output_dir", "parallelism", "format", "methods", "problems", "modes")}
    if args.output_dir is not None:
        overrides["output_dir"] = str(args.output_dir)
    config = (GridConfig.from_file(args.config, **overrides) if args.config
              else GridConfig().with_overrides(**overrides))
    grid = run_grid(config)

    out = Path(config.output_dir)
    (out / "traces").mkdir(parents=True, exist_ok=True)
    for (m, p), by_mode in grid.runs.items():
        for mode, rep in by_mode.items():
            (out / "traces" / f"{m}_{p}_{mode}.json").write_text(rep.to_json(indent=1) + "\n")
    ext = {"csv": "csv", "markdown": "md", "json": "json"}[config.format]
    (out / f"runs.{ext}").write_text(emit_table(grid, config.format, "runs"))
    (out / f"summary.{ext}").write_text(emit_table(grid, config.format, "summary"))
    (out / "grid.json").write_text(json.dumps(grid.to_dict(), indent=1) + "\n")
    sys.stdout.write(emit_table(grid, "markdown", "summary"))

    for key, msg in grid.failures.items():
        log.error("%s failed: %s", "/".join(key), msg)
    return EXIT_OK if grid.ok else EXIT_RUN_FAILED


def _cmd_verify(args) -> int:
    if args.models:
        try:
            specs = json.loads(args.models.read_text())
            models = [SyntheticModel(**s) for s in specs]
        except (OSError, ValueError, TypeError) as exc:
            raise UsageError(f"bad model file {args.models}: {exc}") from exc
    else:
        models = default_models()
    report = verify_propositions(models)
    text = json.dumps(report.to_dict(), indent=1) + "\n"
    if args.out:
        args.out.write_text(text)
    valid = [r for r in report.results if r.valid]
    print(f"{sum(r.passed for r in valid)}/{len(valid)} valid models pass; "
          f"{len(report.results) - len(valid)} invalid")
    for r in report.results:
        if r.valid and not r.passed:
            bad = [c.name for c in r.checks if not c.passed]
            print(f"FAIL {r.model}: {bad}")
    return EXIT_OK if report.passed else EXIT_RUN_FAILED


def _cmd_root(args) -> int:
    if args.digits < 25:
        raise UsageError("--digits must be >= 25")
    print(reference_root(args.problem, args.digits).value)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    handler = {"run": _cmd_run, "grid": _cmd_grid, "verify": _cmd_verify,
               "root": _cmd_root}[args.command]
    try:
        return handler(args)
    except (UsageError, ModelInvalidError, KeyError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    except LocOrderError as exc:
        log.error("%s", exc)
        return EXIT_RUN_FAILED


if __name__ == "__main__":
    sys.exit(main())
