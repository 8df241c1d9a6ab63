"""Multiple-precision scalars with precision counted in decimal digits.

Values are ``gmpy2.mpfr`` objects.  Working precision is always passed
explicitly and installed through a thread-local gmpy2 context, so concurrent
runs never share a precision setting.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from typing import Iterator, Union

import gmpy2
from gmpy2 import mpfr

BigScalar = type(mpfr(0))
Number = Union[int, str, "mpfr"]

LOG2_10 = math.log2(10)
GUARD_BITS = 8


def bits_for(digits: int) -> int:
    """Binary mantissa length that holds ``digits`` decimal digits."""
    if digits < 1:
        raise ValueError(f"digits must be positive, got {digits}")
    return math.ceil(digits * LOG2_10) + GUARD_BITS


def digits_of(x) -> int:
    """Decimal digits carried by the mantissa of ``x``."""
    return int((x.precision - GUARD_BITS) / LOG2_10)


@contextmanager
def working(digits: int) -> Iterator[gmpy2.context]:
    with gmpy2.context(gmpy2.get_context(), precision=bits_for(digits)) as ctx:
        yield ctx


def big(value: Number, digits: int):
    """Round ``value`` (decimal string, int or mpfr) to ``digits`` digits."""
    with working(digits):
        return mpfr(value)


def to_decimal(x, sig: int | None = None) -> str:
    """Decimal scientific string of ``x``.

    With ``sig=None`` enough digits are written for an exact round trip
    through :func:`from_decimal` at the value's own precision.
    """
    if gmpy2.is_zero(x):
        return "0"
    if not gmpy2.is_finite(x):
        return str(x)
    if sig is None:
        sig = math.ceil(x.precision * math.log10(2)) + 1
    mant, exp, _ = x.digits(10, sig)
    sign = ""
    if mant.startswith("-"):
        sign, mant = "-", mant[1:]
    mant = mant.rstrip("0") or "0"
    body = mant[0] + ("." + mant[1:] if len(mant) > 1 else "")
    return f"{sign}{body}e{exp - 1}"


def to_positional(x, sig: int) -> str:
    """Plain decimal string of ``x`` with ``sig`` significant digits."""
    if gmpy2.is_zero(x):
        return "0"
    mant, exp, _ = x.digits(10, sig)
    sign = ""
    if mant.startswith("-"):
        sign, mant = "-", mant[1:]
    if exp <= 0:
        body = "0." + "0" * -exp + mant
    elif exp >= len(mant):
        body = mant + "0" * (exp - len(mant))
    else:
        body = mant[:exp] + "." + mant[exp:]
    if "." in body:
        body = body.rstrip("0").rstrip(".")
    return sign + body


def from_decimal(text: str, digits: int | None = None):
    """Parse a decimal string; precision defaults to the digit count written."""
    if digits is None:
        mant = text.lower().split("e")[0].lstrip("+-").replace(".", "").lstrip("0")
        digits = max(len(mant), 1) + 2
    return big(text, digits)


def log10_abs(x, digits: int = 30):
    """``log10|x|`` evaluated at ``digits`` digits (at least 30)."""
    with working(max(digits, 30)):
        return gmpy2.log10(abs(x))


def sci(value: float | None, sig: int = 4) -> str:
    """Compact scientific rendering like ``1.803e-4`` (no exponent padding)."""
    if value is None:
        return ""
    if value == 0:
        return "0"
    mant, exp = f"{value:.{sig - 1}e}".split("e")
    return f"{mant}e{int(exp)}"
