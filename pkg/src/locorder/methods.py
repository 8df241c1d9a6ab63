"""Six one-point iterations: three without memory, three secant-type.

=======  ==========================  =========  ===============
id       name                        memory     order
=======  ==========================  =========  ===============
phi1     Newton                      0          2
phi2     Chebyshev                   0          3
phi3     Schroder                    0          4
phi4     secant                      1          (1 + sqrt 5)/2
phi5     secant variant (y, x)       1          1 + sqrt 2
phi6     secant variant (2y - x, x)  1          1 + sqrt 3
=======  ==========================  =========  ===============
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import gmpy2
from gmpy2 import mpfr

from .bigfloat import working
from .errors import DegenerateSecantError, StepError, UnknownMethodError
from .problems import TestProblem


@dataclass(frozen=True)
class MethodSpec:
    id: str
    name: str
    memory: int
    derivative_order_needed: int
    rho_expr: str
    _rho: Callable[[], object] = field(repr=False, compare=False)

    def order(self, digits: int = 30):
        return order_of(self, digits)


METHODS: dict[str, MethodSpec] = {
    m.id: m
    for m in (
        MethodSpec("phi1", "Newton", 0, 1, "2", lambda: mpfr(2)),
        MethodSpec("phi2", "Chebyshev", 0, 2, "3", lambda: mpfr(3)),
        MethodSpec("phi3", "Schroder", 0, 3, "4", lambda: mpfr(4)),
        MethodSpec("phi4", "secant", 1, 0, "(1+sqrt(5))/2",
                   lambda: (1 + gmpy2.sqrt(5)) / 2),
        MethodSpec("phi5", "secant variant 1", 1, 0, "1+sqrt(2)",
                   lambda: 1 + gmpy2.sqrt(2)),
        MethodSpec("phi6", "secant variant 2", 1, 0, "1+sqrt(3)",
                   lambda: 1 + gmpy2.sqrt(3)),
    )
}


def get_method(method_id: str) -> MethodSpec:
    try:
        return METHODS[method_id]
    except KeyError:
        raise UnknownMethodError(
            f"unknown method {method_id!r}; expected one of {sorted(METHODS)}"
        ) from None


def order_of(method: MethodSpec, digits: int):
    """Theoretical order as an mpfr correct to ``digits`` digits.

    Irrational orders are recomputed at each call so that thresholds at
    high precision never inherit a low-precision literal.
    """
    if digits < 10:
        raise ValueError(f"digits must be >= 10, got {digits}")
    with working(digits):
        return method._rho()


@dataclass
class MethodState:
    """Current iterate, optional previous iterate, and cached residuals.

    A cached residual is reused only when it was computed with at least the
    step's working precision; otherwise it is re-evaluated.
    """

    current: object
    previous: object | None = None
    f_current: object | None = None
    f_previous: object | None = None
    f_current_digits: int = 0
    f_previous_digits: int = 0

    def advance(self, x_next, f_next=None, digits: int = 0) -> "MethodState":
        return MethodState(x_next, self.current, f_next, self.f_current,
                           digits if f_next is not None else 0,
                           self.f_current_digits)


def _residual(problem: TestProblem, x, cached, cached_digits: int, digits: int):
    if cached is not None and cached_digits >= digits:
        return cached
    return problem.derivs(x)[0]


def divided_difference_inverse(x, y, fx, fy):
    """``(y - x) / (fy - fx)`` in the ambient working precision."""
    den = fy - fx
    if den == 0:
        raise DegenerateSecantError(
            f"f({float(x):.6g}) == f({float(y):.6g}); divided difference undefined")
    return (y - x) / den


def _nomemory_step(method_id: str, problem: TestProblem, x):
    f, d1, d2, d3 = problem.derivs(x)
    if d1 == 0:
        raise StepError(f"f'(x) = 0 at x = {float(x):.6g}")
    u = f / d1
    nxt = x - u
    if method_id == "phi1":
        return nxt
    big_l = d2 / d1 * u
    nxt = nxt - big_l * u / 2
    if method_id == "phi2":
        return nxt
    big_m = d3 / (6 * d1) * u * u
    return nxt - (big_l * big_l / 2 - big_m) * u


def step(method: MethodSpec, state: MethodState, problem: TestProblem, digits: int):
    """Next iterate, with every intermediate quantity at ``digits`` digits."""
    with working(digits):
        x = state.current
        if method.memory == 0:
            return _nomemory_step(method.id, problem, x)

        if state.previous is None:
            raise StepError(f"{method.id} needs a previous iterate")
        fx = _residual(problem, x, state.f_current, state.f_current_digits, digits)
        fxm = _residual(problem, state.previous, state.f_previous,
                        state.f_previous_digits, digits)
        y = x - divided_difference_inverse(state.previous, x, fxm, fx) * fx
        if method.id == "phi4":
            return y
        fy = problem.derivs(y)[0]
        if method.id == "phi5":
            return y - divided_difference_inverse(x, y, fx, fy) * fy
        z = 2 * y - x
        fz = problem.derivs(z)[0]
        return y - divided_difference_inverse(x, z, fx, fz) * fy
