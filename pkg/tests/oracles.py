"""Independent reference computations built on mpmath, not on gmpy2."""

import mpmath
from mpmath import mpf

# f only; derivatives come from finite differences, never from the package
MP_F = {
    "f1": lambda x: x**3 - 3 * x**2 + x - 2,
    "f2": lambda x: x**3 + mpmath.cos(x) - 2,
    "f3": lambda x: 2 * mpmath.sin(x) + 1 - x,
    "f4": lambda x: (x + 1) * mpmath.exp(x - 1) - 1,
    "f5": lambda x: mpmath.exp(x**2 + 7 * x - 30) - 1,
    "f6": lambda x: mpmath.exp(-x) + mpmath.cos(x),
    "f7": lambda x: x - 3 * mpmath.log(x),
}

# step per derivative order, balancing truncation against 30-digit rounding
_H = {1: mpf("1e-10"), 2: mpf("1e-8"), 3: mpf("1e-6")}


def central_difference(pid, x, order, dps=30):
    f = MP_F[pid]
    with mpmath.workdps(dps):
        x = mpf(x)
        h = _H[order]
        if order == 1:
            return (f(x + h) - f(x - h)) / (2 * h)
        if order == 2:
            return (f(x + h) - 2 * f(x) + f(x - h)) / h**2
        return (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) / (2 * h**3)


def mp_root(pid, guess, dps):
    with mpmath.workdps(dps + 20):
        return mpmath.findroot(MP_F[pid], mpf(guess))


def rel_err(a, b):
    a, b = mpf(str(a)), mpf(str(b))
    return abs(a - b) / max(abs(b), mpf("1e-300"))
