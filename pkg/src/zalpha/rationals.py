"""Small helpers on exact rationals: square-root bounds, dyadic rounding,
and the serialization formats used by the JSON interfaces."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import InputError

#: extra binary digits carried by the rational sqrt bounds
SQRT_BITS = 64


def sqrt_lower(x: Fraction, bits: int = SQRT_BITS) -> Fraction:
    """Rational lower bound of sqrt(x) for x >= 0, within 2^-bits relative."""
    if x < 0:
        raise ValueError("sqrt of negative rational")
    if x == 0:
        return Fraction(0)
    scale = 1 << bits
    num = x.numerator * x.denominator * scale * scale
    return Fraction(isqrt(num), x.denominator * scale)


def sqrt_upper(x: Fraction, bits: int = SQRT_BITS) -> Fraction:
    """Rational upper bound of sqrt(x) for x >= 0."""
    if x < 0:
        raise ValueError("sqrt of negative rational")
    if x == 0:
        return Fraction(0)
    scale = 1 << bits
    num = x.numerator * x.denominator * scale * scale
    r = isqrt(num)
    if r * r < num:
        r += 1
    return Fraction(r, x.denominator * scale)


def dyadic_floor(x: Fraction, prec: int) -> Fraction:
    """Largest multiple of 2^-prec that is <= x."""
    s = 1 << prec
    return Fraction((x.numerator * s) // x.denominator, s)


def dyadic_ceil(x: Fraction, prec: int) -> Fraction:
    """Smallest multiple of 2^-prec that is >= x."""
    s = 1 << prec
    return Fraction(-((-x.numerator * s) // x.denominator), s)


def dyadic_round(x: Fraction, prec: int) -> Fraction:
    """Nearest multiple of 2^-prec (ties toward +inf)."""
    s = 1 << prec
    n = x.numerator * s * 2 + x.denominator
    return Fraction(n // (2 * x.denominator), s)


def format_rational(x: Fraction) -> str:
    """Serialize a rational as "p/q" (denominator always explicit)."""
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    """Parse "p/q", a plain integer string, or a decimal string."""
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse rational {s!r}") from exc


def format_decimal_up(x: Fraction, digits: int = 30) -> str:
    """Decimal string >= x with the given number of fractional digits.

    Rounding is always toward +inf so serialized bound constants stay
    valid upper bounds; the output is deterministic.
    """
    sign = ""
    if x < 0:
        # toward +inf for negatives truncates the magnitude
        scaled = (-x.numerator * 10**digits) // x.denominator
        sign = "-" if scaled > 0 else ""
    else:
        scaled = -((-x.numerator * 10**digits) // x.denominator)
    whole, frac = divmod(scaled, 10**digits)
    if sign == "-":
        return f"-{whole}.{frac:0{digits}d}".rstrip("0").rstrip(".") or "0"
    out = f"{whole}.{frac:0{digits}d}".rstrip("0").rstrip(".")
    return out or "0"
