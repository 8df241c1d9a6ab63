"""Synthetic error sequences ``e_{n+1} = C e_n^rho (1 + c e_n^sigma)``.

Used to check the asymptotic relations between the four estimators and the
true error without running any iterative method.  Because the root cancels
from every quantity involved, the sequences are generated directly as
errors; differences and Aitken extrapolations are formed from them.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass, field

import gmpy2
from gmpy2 import mpfr

from ..bigfloat import to_decimal, working
from ..errors import ModelInvalidError
from ..methods import METHODS

GOLDEN = "(1+sqrt(5))/2"


def parse_order(text, digits: int):
    """Order from a number, a numeric string, a method id or an expression
    such as ``"1+sqrt(2)"``."""
    if not isinstance(text, str):
        with working(digits):
            return mpfr(text)
    key = text.replace(" ", "")
    for m in METHODS.values():
        if key in (m.id, m.rho_expr):
            return m.order(digits)
    if key in ("phi", "golden"):
        return METHODS["phi4"].order(digits)
    with working(digits):
        return mpfr(key)


@dataclass
class SyntheticModel:
    C: str | float
    rho: str | float
    e0: str | float
    count: int | None = None
    sigma: str | float = 0.5
    perturbation: str | float = 0
    gamma: str | float | None = None
    digits: int = 60
    # auto length: stop once |e_n| < 10**-stop_exponent (and n >= 6)
    stop_exponent: int = 60

    def __post_init__(self):
        if float(self.C) == 0:
            raise ModelInvalidError("C must be nonzero")
        if not 0 < float(self.e0) < 1:
            raise ModelInvalidError(f"e0 must lie in (0, 1), got {self.e0}")
        if not 0 < float(self.sigma) < 1:
            raise ModelInvalidError(f"sigma must lie in (0, 1), got {self.sigma}")
        if float(parse_order(self.rho, 20)) < (1 + 5**0.5) / 2 - 1e-12:
            raise ModelInvalidError(f"rho must be >= (1+sqrt 5)/2, got {self.rho}")
        if self.count is not None and self.count < 1:
            raise ModelInvalidError("count must be positive")

    def describe(self) -> dict:
        return {k: (v if isinstance(v, (int, type(None))) else str(v))
                for k, v in asdict(self).items()}


@dataclass
class ModelSequence:
    model: SyntheticModel
    rho: object
    errors: list
    residuals: list | None = None


def generate_model_sequence(model: SyntheticModel, with_residuals: bool = False) -> ModelSequence:
    """Errors ``e_0 .. e_{count-1}`` and optionally residuals ``gamma e (1 + e)``.

    mpfr keeps relative precision at any magnitude, so ``model.digits``
    significant digits (at least 40) survive down to the smallest error.
    """
    digits = max(model.digits, 40)
    with working(digits):
        C = mpfr(model.C)
        rho = parse_order(model.rho, digits)
        sigma = mpfr(model.sigma)
        c = mpfr(model.perturbation)
        e = mpfr(model.e0)
        errors = [e]
        limit = mpfr(10) ** (-model.stop_exponent)
        while True:
            n = len(errors)
            if model.count is not None and n >= model.count:
                break
            if model.count is None and n >= 6 and abs(errors[-1]) < limit:
                break
            if n > 10_000:
                raise ModelInvalidError("sequence does not reach the target size")
            mag = abs(e)
            nxt = C * mag**rho * (1 + c * mag**sigma)
            if not 0 < abs(nxt) < mag:
                raise ModelInvalidError(
                    f"|e_{n}| = {to_decimal(abs(nxt), 6)} does not decrease from "
                    f"{to_decimal(mag, 6)} (C={model.C}, rho={model.rho}, e0={model.e0})")
            e = nxt
            errors.append(e)
        residuals = None
        if with_residuals or model.gamma is not None:
            gamma = mpfr(1 if model.gamma is None else model.gamma)
            residuals = [gamma * x * (1 + x) for x in errors]
    return ModelSequence(model, rho, errors, residuals)


@dataclass
class Check:
    name: str
    observed: float
    predicted: float
    tolerance: float
    passed: bool


@dataclass
class ModelResult:
    model: dict
    valid: bool
    checks: list[Check] = field(default_factory=list)
    reason: str = ""

    @property
    def passed(self) -> bool:
        return self.valid and all(c.passed for c in self.checks)


@dataclass
class PropositionReport:
    results: list[ModelResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results if r.valid)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "results": [asdict(r) for r in self.results]}


def _slope(xs, ys):
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    sxx = sum((x - mx) ** 2 for x in xs)
    return sxy / sxx


def _rel(observed, predicted):
    if predicted == 0:
        return abs(observed)
    return abs(observed - predicted) / abs(predicted)


def check_model(model: SyntheticModel, identity_tol: float = 1e-15,
                recon_tol: float = 0.01, slope_tol: float = 1e-3) -> ModelResult:
    """Check the estimator/error relations at the last index of one model."""
    try:
        seq = generate_model_sequence(model, with_residuals=True)
    except ModelInvalidError as exc:
        return ModelResult(model.describe(), False, reason=str(exc))
    e, f, rho = seq.errors, seq.residuals, seq.rho
    n = len(e) - 1
    if n < 4:
        return ModelResult(model.describe(), False, reason="need at least 5 errors")
    checks = []
    with working(max(model.digits, 40) + 20):
        C = abs(mpfr(model.C))
        log = gmpy2.log
        logC = log(C)

        if mpfr(model.perturbation) == 0:
            lam_bar = log(abs(e[n])) / log(abs(e[n - 1]))
            obs, pred = lam_bar - rho, logC / log(abs(e[n - 1]))
            rel = abs(obs - pred) if pred == 0 else _rel(obs, pred)
            checks.append(Check("cloc_identity", float(obs), float(pred), identity_tol,
                                rel <= identity_tol))

        def diff(k):
            return e[k] - e[k - 1]

        def aitken(k):
            return diff(k) ** 2 / (e[k] - 2 * e[k - 1] + e[k - 2])

        log_en = log(abs(e[n]))
        ratio = abs(diff(n) / diff(n - 1))
        hat = logC / (1 - rho) + rho**2 / (rho - 1) * log(ratio)
        beta = (rho - 1) / (2 * rho - 1)
        tilde = beta * logC + rho**2 / (2 * rho - 1) * log(abs(aitken(n)))
        q = abs(f[n] / f[n - 1])
        breve = logC / (1 - rho) + rho / (rho - 1) * log(q)
        for name, pred in (("recon_from_differences", hat),
                           ("recon_from_aitken", tilde),
                           ("recon_from_residuals", breve)):
            rel = _rel(log_en, pred)
            checks.append(Check(name, float(log_en), float(pred), recon_tol, rel <= recon_tol))

        ks = list(range(max(2, n - 3), n + 1))
        slope = _slope([log(abs(e[k])) for k in ks], [log(abs(aitken(k))) for k in ks])
        want = (2 * rho - 1) / rho**2
        checks.append(Check("aitken_exponent_slope", float(slope), float(want), slope_tol,
                            abs(slope - want) <= slope_tol))
    return ModelResult(model.describe(), True, checks)


def verify_propositions(models: list[SyntheticModel], **tolerances) -> PropositionReport:
    return PropositionReport([check_model(m, **tolerances) for m in models])


DEFAULT_CS = ("1e-3", "1e-1", "10", "1e3")
DEFAULT_RHOS = (GOLDEN, "2", "1+sqrt(2)", "1+sqrt(3)", "3", "4")
DEFAULT_E0S = ("1e-2", "1e-4")


def default_models() -> list[SyntheticModel]:
    """4 x 6 x 2 grid of clean power-law models."""
    return [SyntheticModel(C, rho, e0)
            for C, rho, e0 in itertools.product(DEFAULT_CS, DEFAULT_RHOS, DEFAULT_E0S)]


def converges(model: SyntheticModel) -> bool:
    """``|C| e0^(rho-1) < 1``: the first step already shrinks the error."""
    rho = float(parse_order(model.rho, 20))
    return math.log10(abs(float(model.C))) + (rho - 1) * math.log10(float(model.e0)) < 0
