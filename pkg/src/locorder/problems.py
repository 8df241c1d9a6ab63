"""The seven scalar benchmark equations with analytic derivatives.

Each problem exposes ``f`` and its first three derivatives, a 25-digit
root, and the starting points used for one-point methods (``x0``) and for
methods with memory (``x_minus1_x0``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import gmpy2
from gmpy2 import mpfr

from .bigfloat import big, to_decimal, to_positional, working
from .errors import DomainError, RootRefinementError, UnknownProblemError

# derivs(x) -> (f, f', f'', f''') evaluated in the caller's gmpy2 context
Derivs = Callable[[object], tuple]


def _f1(x):
    return (x**3 - 3 * x**2 + x - 2, 3 * x**2 - 6 * x + 1, 6 * x - 6, mpfr(6))


def _f2(x):
    c, s = gmpy2.cos(x), gmpy2.sin(x)
    return (x**3 + c - 2, 3 * x**2 - s, 6 * x - c, 6 + s)


def _f3(x):
    c, s = gmpy2.cos(x), gmpy2.sin(x)
    return (2 * s + 1 - x, 2 * c - 1, -2 * s, -2 * c)


def _f4(x):
    e = gmpy2.exp(x - 1)
    return ((x + 1) * e - 1, (x + 2) * e, (x + 3) * e, (x + 4) * e)


def _f5(x):
    e = gmpy2.exp(x * x + 7 * x - 30)
    p = 2 * x + 7
    return (e - 1, p * e, (p * p + 2) * e, (p**3 + 6 * p) * e)


def _f6(x):
    e, c, s = gmpy2.exp(-x), gmpy2.cos(x), gmpy2.sin(x)
    return (e + c, -e - s, e - c, -e + s)


def _f7(x):
    if x <= 0:
        raise DomainError(f"f7 = x - 3 ln x is undefined at x = {float(x)!r}")
    return (x - 3 * gmpy2.log(x), 1 - 3 / x, 3 / x**2, -6 / x**3)


@dataclass(frozen=True)
class TestProblem:
    __test__ = False  # keep pytest from collecting this class

    id: str
    expression: str
    derivs: Derivs = field(repr=False)
    root_25: str
    x0: str
    x_minus1_x0: tuple[str, str]

    def eval(self, x, order: int = 0, digits: int = 30):
        """Value of the ``order``-th derivative at ``x`` with ``digits`` digits."""
        return evaluate(self, x, order, digits)

    def values(self, x, digits: int) -> tuple:
        """``(f, f', f'', f''')`` at ``x``, all at ``digits`` digits."""
        with working(digits):
            return self.derivs(mpfr(x))


PROBLEMS: dict[str, TestProblem] = {
    p.id: p
    for p in (
        TestProblem("f1", "x^3 - 3x^2 + x - 2", _f1,
                    "2.893289196304497788906356", "2.5", ("2.25", "2.60")),
        TestProblem("f2", "x^3 + cos x - 2", _f2,
                    "1.172577964753970012673333", "1.5", ("1.50", "2.50")),
        TestProblem("f3", "2 sin x + 1 - x", _f3,
                    "2.380061273139339017212548", "2.5", ("1.00", "2.00")),
        TestProblem("f4", "(x + 1) e^(x - 1) - 1", _f4,
                    "0.557145598997611416858672", "1.0", ("0.00", "0.75")),
        TestProblem("f5", "e^(x^2 + 7x - 30) - 1", _f5,
                    "3.0", "2.94", ("2.90", "3.10")),
        TestProblem("f6", "e^(-x) + cos x", _f6,
                    "1.746139530408012417650703", "1.5", ("1.60", "1.90")),
        TestProblem("f7", "x - 3 ln x", _f7,
                    "1.857183860207835336456981", "2.0", ("1.00", "2.00")),
    )
}


def get_problem(problem_id: str) -> TestProblem:
    try:
        return PROBLEMS[problem_id]
    except KeyError:
        raise UnknownProblemError(
            f"unknown problem {problem_id!r}; expected one of {sorted(PROBLEMS)}"
        ) from None


def evaluate(problem: TestProblem, x, order: int, digits: int):
    if not 0 <= order <= 3:
        raise ValueError(f"derivative order must be in 0..3, got {order}")
    if digits < 10:
        raise ValueError(f"digits must be >= 10, got {digits}")
    return problem.values(x, digits)[order]


@dataclass(frozen=True)
class ReferenceRoot:
    problem_id: str
    digits: int
    value: str
    residual_bound: str

    def big(self, digits: int | None = None):
        return big(self.value, digits or self.digits + 10)


def reference_root(problem: TestProblem | str, digits: int) -> ReferenceRoot:
    """Root refined by Newton's method to ``digits`` correct decimals.

    Precision starts at 30 digits and doubles until it exceeds
    ``digits + 10``.  Results are cached per ``(problem, digits)``.
    """
    pid = problem if isinstance(problem, str) else problem.id
    return _reference_root(pid, digits)


@lru_cache(maxsize=None)
def _reference_root(pid: str, digits: int) -> ReferenceRoot:
    if digits < 25:
        raise ValueError(f"reference roots need digits >= 25, got {digits}")
    problem = get_problem(pid)
    target = digits + 10
    levels = []
    d = 30
    while d < target:
        levels.append(d)
        d *= 2
    levels.append(target)

    x = big(problem.x0, 30)
    steps = 0
    for prec in levels:
        with working(prec):
            x = mpfr(x)
            tol = mpfr(10) ** (-(prec - 4))
            while True:
                steps += 1
                if steps > 200:
                    raise RootRefinementError(
                        f"{pid}: Newton refinement did not converge at {prec} digits")
                f, df = problem.derivs(x)[:2]
                if f == 0:
                    break
                if df == 0:
                    raise RootRefinementError(f"{pid}: zero derivative at {x}")
                dx = f / df
                x -= dx
                if abs(dx) <= tol * max(abs(x), 1):
                    break

    with working(target):
        resid = abs(problem.derivs(x)[0])
        if resid >= mpfr(10) ** (-digits):
            raise RootRefinementError(
                f"{pid}: |f(root)| = {to_decimal(resid, 5)} exceeds 1e-{digits}")
    if abs(x - big(problem.root_25, 40)) > big("1e-23", 40) * abs(x):
        raise RootRefinementError(f"{pid}: refined root left the tabulated root")
    return ReferenceRoot(pid, digits, to_positional(x, digits + 6), to_decimal(resid, 6))
