"""Exact rational parsing and decimal display helpers.

Every probability in the package is a :class:`fractions.Fraction`.  Decimal
text such as ``".48"`` is read exactly (12/25), never through a float.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Union

RationalLike = Union[Fraction, int, str, float]

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def to_fraction(value: RationalLike) -> Fraction:
    """Convert ``value`` to an exact Fraction.

    Strings may be ``"num/den"`` or a finite decimal (``"0.48"``, ``".48"``).
    Floats are read through their shortest repr, so ``0.48`` gives 12/25
    rather than the binary approximation.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rational numbers")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"not a finite number: {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty number")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact rational: {value!r}") from exc
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def probability(value: RationalLike, what: str = "probability") -> Fraction:
    """Exact value checked to lie in [0, 1]."""
    p = to_fraction(value)
    if not ZERO <= p <= ONE:
        raise ValueError(f"{what} must lie in [0, 1], got {p}")
    return p


def round_half_up(x: Fraction, places: int) -> Fraction:
    scale = 10**places
    scaled = x * scale
    n = math.floor(scaled)
    if scaled - n >= HALF:
        n += 1
    return Fraction(n, scale)


def truncate(x: Fraction, places: int) -> Fraction:
    scale = 10**places
    return Fraction(math.floor(x * scale), scale)


def decimal_str(x: Fraction, places: int, *, leading_zero: bool = True) -> str:
    """Fixed-point text of ``x``, which must already be a multiple of 10**-places."""
    scale = 10**places
    scaled = x * scale
    if scaled.denominator != 1:
        raise ValueError(f"{x} is not representable with {places} decimals")
    n = scaled.numerator
    sign = "-" if n < 0 else ""
    whole, frac = divmod(abs(n), scale)
    head = str(whole) if (whole or leading_zero) else ""
    if places == 0:
        return sign + str(whole)
    return f"{sign}{head}.{frac:0{places}d}"


def sig_digits(x: Fraction, digits: int) -> str:
    """``x`` rounded to ``digits`` significant digits, trailing zeros dropped."""
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    x = abs(x)
    exponent = math.floor(math.log10(x.numerator) - math.log10(x.denominator))
    # log10 can land one off near powers of ten
    while Fraction(10) ** exponent > x:
        exponent -= 1
    while Fraction(10) ** (exponent + 1) <= x:
        exponent += 1
    places = max(digits - 1 - exponent, 0)
    text = decimal_str(round_half_up(x, places), places)
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return sign + text
