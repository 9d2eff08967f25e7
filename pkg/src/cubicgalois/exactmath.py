"""Exact rational scalars.

``Rational`` is :class:`fractions.Fraction`: arbitrary-precision numerator,
positive denominator, always stored in lowest terms with zero as ``0/1``.
"""

from fractions import Fraction
from math import isqrt
import re

from .errors import NegativeInput, NotASquare, ParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def as_rational(x):
    """Coerce ints, Fractions and ``"p/q"`` strings to a Rational.

    Floats are refused: they would smuggle rounding error into exact code.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def parse_rational(text):
    m = _RATIONAL_RE.match(text)
    if not m:
        pos = len(text) - len(text.lstrip())
        raise ParseError(text, pos, "rational literal p or p/q")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(text, m.start(2), "nonzero denominator")
    return Fraction(num, den)


def format_rational(x):
    """``"p/q"``, with the denominator omitted when it is 1."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def int_sqrt_exact(n):
    """Return s with s*s == n, or None if n is not a perfect square."""
    if n < 0:
        return None
    s = isqrt(n)
    return s if s * s == n else None


def is_square(x):
    x = as_rational(x)
    if x < 0:
        return False
    return (int_sqrt_exact(x.numerator) is not None
            and int_sqrt_exact(x.denominator) is not None)


def rat_sqrt(x):
    """Nonnegative exact square root of a nonnegative rational.

    Raises NegativeInput for x < 0 and NotASquare when the numerator or the
    denominator (in lowest terms) is not a perfect square.
    """
    x = as_rational(x)
    if x < 0:
        raise NegativeInput(f"square root of negative rational {format_rational(x)}")
    num = int_sqrt_exact(x.numerator)
    den = int_sqrt_exact(x.denominator)
    if num is None or den is None:
        raise NotASquare(f"{format_rational(x)} is not the square of a rational")
    return Fraction(num, den)


def rationalize(x, max_den):
    """Best rational approximation of ``x`` with denominator at most ``max_den``."""
    if max_den < 1:
        raise ValueError("max_den must be at least 1")
    return Fraction(x).limit_denominator(max_den)
