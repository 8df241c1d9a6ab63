"""Adaptive-precision driver: one method, one problem, one stopping mode.

The loop is forward only.  After computing the candidate ``x_{n+1}`` the
mode's driving quantity is evaluated on the newest window:

=======  ===============================  ======================  =====================
mode     quantity                         digits factor           stop exponent
=======  ===============================  ======================  =====================
cloc     ``|x_{n+1} - alpha|``            rho                     eta
acloc    ``|dx_{n+1} / dx_n|``            rho^3 / (rho - 1)       eta (rho-1)/rho^2
ecloc    ``|x_{n+1} - alpha~_{n+1}|``     rho^3 / (2 rho - 1)     eta (2rho-1)/rho^2
pcloc    ``|f(x_{n+1}) / f(x_n)|``        rho^2 / (rho - 1)       eta (rho-1)/rho
=======  ===============================  ======================  =====================

If ``quantity < 10**-exponent`` the candidate is rejected and the last
accepted iterate is ``x_I``.  Otherwise the candidate is accepted and the
working precision for the next step becomes
``max(previous, floor(factor * (-log10(quantity) + 2)))``.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Any

import gmpy2
from gmpy2 import mpfr

from . import estimators as est
from .bigfloat import big, from_decimal, log10_abs, to_decimal, working
from .errors import (
    ConvergedExactly,
    DegenerateExtrapolationError,
    DomainError,
    NotAsymptoticError,
    StepError,
)
from .methods import MethodSpec, MethodState, get_method, order_of, step
from .problems import TestProblem, get_problem, reference_root

# ρ and thresholds never need more than this
SCHEDULE_DIGITS = 40
# slack for decimal quantities like 1e-100 that binary cannot hold exactly
_FLOOR_SLACK = mpfr("1e-20")


class EstimatorMode(str, enum.Enum):
    CLOC = "cloc"
    ACLOC = "acloc"
    ECLOC = "ecloc"
    PCLOC = "pcloc"

    @property
    def needs_root(self) -> bool:
        return self is EstimatorMode.CLOC

    @property
    def first_index(self) -> int:
        """Smallest candidate index whose window uses only ``x_0`` onward."""
        return {"cloc": 1, "pcloc": 1, "acloc": 2, "ecloc": 2}[self.value]


def _mode(mode) -> EstimatorMode:
    return mode if isinstance(mode, EstimatorMode) else EstimatorMode(str(mode).lower())


def _factor(mode: EstimatorMode, rho):
    if mode is EstimatorMode.CLOC:
        return rho
    if mode is EstimatorMode.ACLOC:
        return rho**3 / (rho - 1)
    if mode is EstimatorMode.ECLOC:
        return rho**3 / (2 * rho - 1)
    return rho**2 / (rho - 1)


def stop_exponent(mode, rho, eta: int):
    """Exponent ``T`` of the stopping threshold ``10**-T``."""
    mode = _mode(mode)
    with working(SCHEDULE_DIGITS):
        rho = mpfr(rho)
        if mode is EstimatorMode.CLOC:
            return mpfr(eta)
        if mode is EstimatorMode.ACLOC:
            return eta * (rho - 1) / rho**2
        if mode is EstimatorMode.ECLOC:
            return eta * (2 * rho - 1) / rho**2
        return eta * (rho - 1) / rho


def adaptive_digits(mode, rho, quantity) -> int | None:
    """Working precision suggested by the mode's driving quantity.

    Returns ``None`` when ``quantity >= 1`` (keep the current precision) and
    raises :class:`ConvergedExactly` when it is zero.
    """
    mode = _mode(mode)
    if quantity == 0:
        raise ConvergedExactly(f"{mode.value} driving quantity is zero")
    if abs(quantity) >= 1:
        return None
    with working(SCHEDULE_DIGITS):
        rho = mpfr(rho)
        value = _factor(mode, rho) * (-log10_abs(quantity, SCHEDULE_DIGITS) + 2)
        return int(gmpy2.floor(value + _FLOOR_SLACK))


def should_stop(mode, rho, eta: int, quantity) -> bool:
    mode = _mode(mode)
    if quantity == 0:
        return True
    with working(SCHEDULE_DIGITS):
        return bool(log10_abs(quantity, SCHEDULE_DIGITS) < -stop_exponent(mode, rho, eta))


@dataclass
class PrecisionPolicy:
    bootstrap_digits: int = 64
    max_digits: int | None = None
    monotone: bool = True

    def cap(self, rho, eta: int) -> int:
        floor_cap = math.ceil(float(rho) * (eta + 2)) + 64
        if self.max_digits is None:
            return floor_cap + 960
        if self.max_digits < floor_cap:
            raise ValueError(f"max_digits {self.max_digits} < required {floor_cap}")
        return self.max_digits

    def __post_init__(self):
        if self.bootstrap_digits < 30:
            raise ValueError("bootstrap_digits must be >= 30")


STOP_REASONS = ("criterion_met", "exact_zero", "degenerate", "iteration_cap", "domain_error")
ESTIMATORS = ("bar", "hat", "tilde", "breve")
MODE_OF_ESTIMATOR = {"bar": "cloc", "hat": "acloc", "tilde": "ecloc", "breve": "pcloc"}


@dataclass
class RunReport:
    """Trace and final estimates of one run; numbers are decimal strings.

    ``seeds`` holds the starting points (``x_0`` last) and ``iterates`` the
    accepted ``x_1 .. x_I``; ``digits_schedule[k]`` is the precision used to
    compute ``iterates[k]``.  ``rejected_iterate`` is the candidate
    ``x_{I+1}`` on which the stopping rule fired.
    """

    method_id: str
    problem_id: str
    mode: str
    eta: int
    I: int
    iterates: list[str]
    residuals: list[str]
    digits_schedule: list[int]
    stop_reason: str
    seeds: list[str] = field(default_factory=list)
    seed_residuals: list[str] = field(default_factory=list)
    rejected_iterate: str | None = None
    rejected_digits: int | None = None
    lambda_bar: str | None = None
    lambda_hat: str | None = None
    lambda_tilde: str | None = None
    lambda_breve: str | None = None
    delta_lambda: dict[str, str | None] = field(default_factory=dict)
    message: str = ""

    def delta(self, estimator: str) -> float | None:
        v = self.delta_lambda.get(estimator)
        return None if v is None else float(v)

    @property
    def ok(self) -> bool:
        return self.stop_reason in ("criterion_met", "exact_zero")

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RunReport":
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls.from_dict(json.loads(text))


def _seed_values(method: MethodSpec, problem: TestProblem, seeds, digits: int):
    if seeds is None:
        seeds = problem.x_minus1_x0 if method.memory else (problem.x0,)
    if len(seeds) != method.memory + 1:
        raise ValueError(f"{method.id} needs {method.memory + 1} starting point(s)")
    return [big(s, digits) for s in seeds]


def _quantity(mode: EstimatorMode, seq: list, fs: list, k: int, alpha, digits: int):
    """Driving quantity for candidate ``x_k`` (``seq[i]`` is ``x_i``)."""
    if mode is EstimatorMode.CLOC:
        with working(max(digits, alpha.precision)):
            return abs(seq[k] - alpha)
    if k < mode.first_index:
        return None
    with working(digits + 10):
        if mode is EstimatorMode.ACLOC:
            den = seq[k - 1] - seq[k - 2]
            if den == 0:
                raise ConvergedExactly("repeated iterate")
            return abs((seq[k] - seq[k - 1]) / den)
        if mode is EstimatorMode.ECLOC:
            return abs(est.aitken_alpha(seq[k], seq[k - 1], seq[k - 2], digits + 10).e_tilde)
        if fs[k - 1] == 0:
            raise ConvergedExactly("zero residual")
        return abs(fs[k] / fs[k - 1])


def run(
    method: MethodSpec | str,
    problem: TestProblem | str,
    mode: EstimatorMode | str,
    eta: int = 2200,
    policy: PrecisionPolicy | None = None,
    *,
    max_iter: int = 1000,
    seeds: tuple[str, ...] | None = None,
) -> RunReport:
    """Iterate until the mode's stopping rule fires and report the estimates.

    ``seeds`` overrides the tabulated starting points (in order, ``x_0``
    last).
    """
    method = get_method(method) if isinstance(method, str) else method
    problem = get_problem(problem) if isinstance(problem, str) else problem
    mode = _mode(mode)
    policy = policy or PrecisionPolicy()
    rho = order_of(method, SCHEDULE_DIGITS)
    cap = policy.cap(rho, eta)
    alpha = reference_root(problem, eta + 64).big()

    digits = policy.bootstrap_digits
    seed_x = _seed_values(method, problem, seeds, digits)
    seed_f = [problem.values(x, digits)[0] for x in seed_x]
    seq = [seed_x[-1]]  # x_0, x_1, ...
    fs = [seed_f[-1]]
    schedule: list[int] = []
    state = MethodState(seed_x[-1], seed_x[0] if method.memory else None,
                        seed_f[-1], seed_f[0] if method.memory else None, digits, digits)
    reason, message = "iteration_cap", f"no stop within {max_iter} iterations"
    rejected = None

    for _ in range(max_iter):
        n = len(seq) - 1
        if fs[n] == 0:
            reason, message = "exact_zero", f"f(x_{n}) == 0"
            break
        try:
            x_new = step(method, state, problem, digits)
            f_new = problem.values(x_new, digits)[0]
            seq.append(x_new)
            fs.append(f_new)
            q = _quantity(mode, seq, fs, n + 1, alpha, digits)
            if q is not None and should_stop(mode, rho, eta, q):
                reason, message = "criterion_met", ""
                rejected = (seq.pop(), fs.pop(), digits)
                break
            suggested = None if q is None else adaptive_digits(mode, rho, q)
        except ConvergedExactly as exc:
            reason, message = "exact_zero", str(exc)
            rejected = (seq.pop(), fs.pop(), digits)
            break
        except (StepError, DegenerateExtrapolationError) as exc:
            reason, message = "degenerate", str(exc)
            del seq[n + 1:], fs[n + 1:]
            break
        except DomainError as exc:
            reason, message = "domain_error", str(exc)
            del seq[n + 1:], fs[n + 1:]
            break
        schedule.append(digits)
        state = state.advance(x_new, f_new, digits)
        if suggested is not None:
            digits = max(digits, suggested) if policy.monotone else suggested
            digits = max(min(digits, cap), 30)

    report = RunReport(
        method_id=method.id,
        problem_id=problem.id,
        mode=mode.value,
        eta=eta,
        I=len(seq) - 1,
        iterates=[to_decimal(x) for x in seq[1:]],
        residuals=[to_decimal(f) for f in fs[1:]],
        digits_schedule=schedule,
        stop_reason=reason,
        seeds=[to_decimal(x) for x in seed_x],
        seed_residuals=[to_decimal(f) for f in seed_f],
        rejected_iterate=None if rejected is None else to_decimal(rejected[0]),
        rejected_digits=None if rejected is None else rejected[2],
        message=message,
    )
    _fill_lambdas(report, method, alpha)
    return report


def _fill_lambdas(report: RunReport, method: MethodSpec, alpha) -> None:
    lams = lambdas_at_I(report, alpha=alpha)
    with working(SCHEDULE_DIGITS):
        rho = order_of(method, SCHEDULE_DIGITS)
        for name, lam in lams.items():
            setattr(report, f"lambda_{name}", None if lam is None else to_decimal(lam, 30))
            report.delta_lambda[name] = (
                None if lam is None else to_decimal(abs(mpfr(rho) - lam), 20))


def lambdas_at_I(report: RunReport, alpha=None) -> dict[str, Any]:
    """Recompute the four estimates at the last admissible index from the trace.

    Entries are ``None`` where the trace is too short (fewer than 1, 2 or 3
    accepted iterates) or where an input is zero or not below 1 in magnitude.
    """
    I = report.I
    seq = [from_decimal(report.seeds[-1])] + [from_decimal(s) for s in report.iterates]
    fs = [from_decimal(report.seed_residuals[-1])] + [from_decimal(s) for s in report.residuals]
    if alpha is None:
        alpha = reference_root(report.problem_id, report.eta + 64).big()
    digits = max([report.eta + 74] + report.digits_schedule) + 10

    out: dict[str, Any] = dict.fromkeys(ESTIMATORS)
    with working(digits):
        def attempt(name, fn):
            try:
                out[name] = fn()
            except (ConvergedExactly, NotAsymptoticError, DegenerateExtrapolationError):
                out[name] = None

        if I >= 1:
            attempt("bar", lambda: est.cloc(seq[I] - alpha, seq[I - 1] - alpha, digits))
            attempt("breve", lambda: est.pcloc(fs[I], fs[I - 1], digits))
        if I >= 2:
            attempt("hat", lambda: est.acloc(seq[I], seq[I - 1], seq[I - 2], digits))
        if I >= 3:
            attempt("tilde", lambda: est.ecloc(seq[I - 3:I + 1], digits))
    return out
