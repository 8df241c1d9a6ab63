"""Log-ratio estimators of the local order of convergence.

All four estimators share one shape, ``log|a_n| / log|a_{n-1}|``, applied to
a different error surrogate:

* ``cloc``   true errors ``x_n - alpha``
* ``acloc``  iterate differences ``x_n - x_{n-1}``
* ``ecloc``  Aitken-extrapolated errors ``x_n - alpha~_n``
* ``pcloc``  residuals ``f(x_n)``

Natural logs are used throughout; the ratio is base independent.  Each
function computes at the precision of its widest input unless ``digits`` is
given, so no ambient precision is assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import gmpy2

from .bigfloat import GUARD_BITS, LOG2_10, working
from .errors import (
    ConvergedExactly,
    DegenerateExtrapolationError,
    EstimatorUndefinedError,
    NotAsymptoticError,
)


def _digits(values, digits: int | None) -> int:
    if digits is not None:
        return digits
    bits = max(getattr(v, "precision", 53) for v in values)
    return max(30, int((bits - GUARD_BITS) / LOG2_10) + 1)


def _log_ratio(num, den, what: str):
    if num == 0 or den == 0:
        raise ConvergedExactly(f"zero {what}")
    a, b = abs(num), abs(den)
    if a >= 1 or b >= 1:
        raise NotAsymptoticError(f"|{what}| >= 1: ({float(a):.3g}, {float(b):.3g})")
    return gmpy2.log(a) / gmpy2.log(b)


def cloc(e_n, e_prev, digits: int | None = None):
    """``log|e_n| / log|e_{n-1}|`` from true errors."""
    with working(_digits((e_n, e_prev), digits)):
        return _log_ratio(e_n, e_prev, "error")


def acloc(x_n, x_nm1, x_nm2, digits: int | None = None):
    """Root-free estimate from consecutive differences ``x_k - x_{k-1}``."""
    with working(_digits((x_n, x_nm1, x_nm2), digits)):
        return _log_ratio(x_n - x_nm1, x_nm1 - x_nm2, "iterate difference")


@dataclass(frozen=True)
class ExtrapolatedError:
    alpha_tilde: object
    e_tilde: object


def aitken_alpha(x_n, x_nm1, x_nm2, digits: int | None = None) -> ExtrapolatedError:
    """Aitken delta-squared limit of three consecutive iterates."""
    with working(_digits((x_n, x_nm1, x_nm2), digits)):
        d2 = x_n - 2 * x_nm1 + x_nm2
        if d2 == 0:
            raise DegenerateExtrapolationError("zero second difference")
        d1 = x_n - x_nm1
        alpha = x_n - d1 * d1 / d2
        return ExtrapolatedError(alpha, x_n - alpha)


def ecloc(window, digits: int | None = None):
    """ECLOC from four iterates ``(x_{n-3}, x_{n-2}, x_{n-1}, x_n)``, oldest first."""
    if len(window) != 4:
        raise ValueError(f"ecloc needs exactly 4 iterates, got {len(window)}")
    x3, x2, x1, x0 = window
    d = _digits(window, digits)
    e_n = aitken_alpha(x0, x1, x2, d).e_tilde
    e_prev = aitken_alpha(x1, x2, x3, d).e_tilde
    with working(d):
        return _log_ratio(e_n, e_prev, "extrapolated error")


def pcloc(f_n, f_prev, digits: int | None = None):
    """Residual-based estimate ``log|f(x_n)| / log|f(x_{n-1})|``."""
    with working(_digits((f_n, f_prev), digits)):
        return _log_ratio(f_n, f_prev, "residual")


def pcoc(f_np1, f_n, f_nm1, digits: int | None = None):
    """Three-residual quotient estimate ``log|f_{n+1}/f_n| / log|f_n/f_{n-1}|``.

    Kept as a reference value; the driver does not stop on it.
    """
    with working(_digits((f_np1, f_n, f_nm1), digits)):
        if f_np1 == 0 or f_n == 0 or f_nm1 == 0:
            raise EstimatorUndefinedError("zero residual")
        q_new, q_old = abs(f_np1 / f_n), abs(f_n / f_nm1)
        if q_new == 1 or q_old == 1:
            raise EstimatorUndefinedError("residual quotient of magnitude 1")
        return gmpy2.log(q_new) / gmpy2.log(q_old)


@dataclass
class IterateWindow:
    """Up to four consecutive iterates, oldest first, with optional
    matching residuals and true errors."""

    xs: list
    fs: list | None = None
    es: list | None = None
    digits: int | None = field(default=None)

    def __post_init__(self):
        if len(self.xs) > 4:
            raise ValueError("a window holds at most 4 iterates")
        for name in ("fs", "es"):
            other = getattr(self, name)
            if other is not None and len(other) != len(self.xs):
                raise ValueError(f"{name} length {len(other)} != xs length {len(self.xs)}")

    def cloc(self):
        return cloc(self.es[-1], self.es[-2], self.digits)

    def acloc(self):
        return acloc(self.xs[-1], self.xs[-2], self.xs[-3], self.digits)

    def ecloc(self):
        return ecloc(self.xs[-4:], self.digits)

    def pcloc(self):
        return pcloc(self.fs[-1], self.fs[-2], self.digits)
