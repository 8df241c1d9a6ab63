"""Batch runs over (method, problem, mode) and min-max error intervals."""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path

import gmpy2

from ..bigfloat import from_decimal, working
from ..driver import ESTIMATORS, EstimatorMode, RunReport, run
from ..errors import LocOrderError, UsageError
from ..methods import METHODS
from ..problems import PROBLEMS
from .published import (
    DELTA_LAMBDA,
    ERROR_INTERVALS,
    ITERATION_COUNTS,
    METHOD_IDS,
    PROBLEM_IDS,
)

MODES = tuple(m.value for m in EstimatorMode)
FORMATS = ("csv", "json", "markdown")


@dataclass
class GridConfig:
    methods: tuple[str, ...] = METHOD_IDS
    problems: tuple[str, ...] = PROBLEM_IDS
    modes: tuple[str, ...] = MODES
    eta: int = 2200
    output_dir: str = "results"
    format: str = "csv"
    parallelism: int = field(default_factory=lambda: os.cpu_count() or 1)
    # "phi6/f2" -> ["2.50", "1.50"]; replaces the tabulated starting points
    seed_overrides: dict[str, list[str]] = field(default_factory=dict)

    def __post_init__(self):
        self.methods = tuple(self.methods)
        self.problems = tuple(self.problems)
        self.modes = tuple(str(m).lower() for m in self.modes)
        self.validate()

    def validate(self) -> None:
        for name, chosen, known in (
            ("methods", self.methods, METHODS),
            ("problems", self.problems, PROBLEMS),
            ("modes", self.modes, MODES),
        ):
            if not chosen:
                raise UsageError(f"empty {name} selection")
            bad = [c for c in chosen if c not in known]
            if bad:
                raise UsageError(f"unknown {name}: {bad}")
        if self.eta < 50:
            raise UsageError(f"eta must be >= 50, got {self.eta}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}; expected one of {FORMATS}")
        if self.parallelism < 1:
            raise UsageError("parallelism must be positive")

    @classmethod
    def from_file(cls, path: str | Path, **overrides) -> "GridConfig":
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from exc
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        data.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**data)

    def with_overrides(self, **overrides) -> "GridConfig":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def seeds_for(self, method: str, problem: str):
        s = self.seed_overrides.get(f"{method}/{problem}")
        return None if s is None else tuple(s)


@dataclass(frozen=True)
class ErrorInterval:
    estimator: str
    method_id: str
    lo: float
    hi: float
    lo_problem: str
    hi_problem: str


@dataclass
class GridReport:
    config: GridConfig
    # (method, problem) -> mode -> report
    runs: dict[tuple[str, str], dict[str, RunReport]]
    failures: dict[tuple[str, str, str], str] = field(default_factory=dict)

    def report(self, method: str, problem: str) -> RunReport | None:
        """Report of the first configured mode that completed."""
        by_mode = self.runs.get((method, problem), {})
        for mode in self.config.modes:
            if mode in by_mode:
                return by_mode[mode]
        return None

    def reports(self) -> list[RunReport]:
        out = []
        for m in self.config.methods:
            for p in self.config.problems:
                r = self.report(m, p)
                if r is not None:
                    out.append(r)
        return out

    def counts(self) -> dict[str, dict[str, int]]:
        return {m: {p: r.I for p in self.config.problems
                    if (r := self.report(m, p)) is not None}
                for m in self.config.methods}

    def intervals(self) -> list[ErrorInterval]:
        return error_intervals(self.reports())

    def mode_agreement(self) -> dict[tuple[str, str], bool]:
        out = {}
        for key, by_mode in self.runs.items():
            reps = list(by_mode.values())
            out[key] = all(traces_agree(reps[0], r) for r in reps[1:])
        return out

    @property
    def ok(self) -> bool:
        return not self.failures and all(r.ok for d in self.runs.values() for r in d.values())

    def to_dict(self) -> dict:
        return {
            "config": asdict(self.config),
            "counts": self.counts(),
            "intervals": [asdict(iv) for iv in self.intervals()],
            "mode_agreement": {f"{m}/{p}": v for (m, p), v in self.mode_agreement().items()},
            "failures": {"/".join(k): v for k, v in self.failures.items()},
        }


def error_intervals(reports: list[RunReport]) -> list[ErrorInterval]:
    """Min and max of each estimator's error over problems, per method."""
    by_method: dict[str, list[RunReport]] = {}
    for r in reports:
        by_method.setdefault(r.method_id, []).append(r)
    out = []
    for m, reps in by_method.items():
        for est in ESTIMATORS:
            vals = [(r.delta(est), r.problem_id) for r in reps if r.delta(est) is not None]
            if not vals:
                continue
            lo, hi = min(vals), max(vals)
            out.append(ErrorInterval(est, m, lo[0], hi[0], lo[1], hi[1]))
    return out


def traces_agree(a: RunReport, b: RunReport, slack_digits: int = 2) -> bool:
    """Same ``I`` and iterates equal to the smaller working precision."""
    if a.I != b.I:
        return False
    for xa, xb, da, db in zip(a.iterates, b.iterates, a.digits_schedule, b.digits_schedule):
        d = min(da, db)
        with working(max(da, db) + 10):
            va, vb = from_decimal(xa, da + 5), from_decimal(xb, db + 5)
            tol = gmpy2.mpfr(10) ** (slack_digits - d) * max(abs(va), 1)
            if abs(va - vb) > tol:
                return False
    return True


def _run_task(task):
    method, problem, mode, eta, seeds = task
    try:
        return task, run(method, problem, mode, eta, seeds=seeds), None
    except LocOrderError as exc:
        return task, None, f"{type(exc).__name__}: {exc}"


def run_grid(config: GridConfig) -> GridReport:
    """Run every selected (method, problem, mode); failures are kept, not raised.

    Independent runs are spread over ``config.parallelism`` processes; the
    result is assembled in configuration order whatever the completion order.
    """
    config.validate()
    tasks = [(m, p, mode, config.eta, config.seeds_for(m, p))
             for m in config.methods for p in config.problems for mode in config.modes]
    if config.parallelism > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]

    runs: dict[tuple[str, str], dict[str, RunReport]] = {}
    failures = {}
    for (m, p, mode, _, _), report, err in results:
        if report is None:
            failures[(m, p, mode)] = err
        else:
            runs.setdefault((m, p), {})[mode] = report
    return GridReport(config, runs, failures)


@dataclass(frozen=True)
class Comparison:
    method: str
    problem: str
    estimator: str
    computed: float | None
    published: float
    rel_err: float | None
    tolerance: float

    @property
    def ok(self) -> bool:
        return self.rel_err is not None and self.rel_err <= self.tolerance


def compare_cells(grid: GridReport, tolerance: float = 0.10) -> list[Comparison]:
    """Per-cell comparison of the error estimates with the published values."""
    out = []
    for r in grid.reports():
        row = DELTA_LAMBDA.get(r.method_id, {}).get(r.problem_id)
        if row is None:
            continue
        for est, pub in zip(("bar", "hat", "tilde", "breve"), row[1:]):
            got = r.delta(est)
            rel = None if got is None else abs(got - pub) / pub
            out.append(Comparison(r.method_id, r.problem_id, est, got, pub, rel, tolerance))
    return out


def compare_intervals(grid: GridReport, tolerance: float = 0.10) -> list[Comparison]:
    """Endpoint comparison with the published 2-significant-digit intervals.

    ``problem`` is ``"lo"`` or ``"hi"``.
    """
    out = []
    for iv in grid.intervals():
        pub = ERROR_INTERVALS.get(iv.method_id, {}).get(iv.estimator)
        if pub is None:
            continue
        for side, got, want in (("lo", iv.lo, pub[0]), ("hi", iv.hi, pub[1])):
            rel = abs(got - want) / want
            out.append(Comparison(iv.method_id, side, iv.estimator, got, want, rel, tolerance))
    return out


def compare_counts(grid: GridReport) -> list[tuple[str, str, int, int]]:
    """``(method, problem, computed, published)`` for every count in the grid."""
    out = []
    for m, row in grid.counts().items():
        for p, got in row.items():
            if m in ITERATION_COUNTS:
                out.append((m, p, got, ITERATION_COUNTS[m][PROBLEM_IDS.index(p)]))
    return out
