"""Strict rational parsing, canonical formatting, exact square-root bounds.

The wire format for rationals is ``"num/den"`` in lowest terms, or ``"n"``
for integers.  Decimal and float notation is rejected on purpose: every
number in this package is exact.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import ParseError

__all__ = [
    "parse_rational",
    "format_rational",
    "sqrt_floor",
    "sqrt_upper_bound",
]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or an integer string into a Fraction.

    >>> parse_rational("3/4")
    Fraction(3, 4)
    >>> parse_rational("-2")
    Fraction(-2, 1)
    """
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise ParseError(f"not a rational literal: {text!r} (use 'a/b' or an integer string)")
    num, slash, den = text.strip().partition("/")
    if slash and int(den) == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den)) if slash else Fraction(int(num))


def format_rational(value: Fraction) -> str:
    """Canonical form: lowest terms ``num/den``, plain ``n`` for integers."""
    return str(Fraction(value))


def sqrt_floor(value: Fraction) -> int:
    """Largest integer m with m*m <= value (value must be nonnegative)."""
    if value < 0:
        raise ValueError("sqrt of a negative rational")
    # floor(sqrt(a/b)) = floor(sqrt(floor(a/b))) does not hold in general;
    # isqrt(a*b)//b does: sqrt(a/b) = sqrt(a*b)/b.
    m = math.isqrt(value.numerator * value.denominator) // value.denominator
    while Fraction((m + 1) * (m + 1)) <= value:
        m += 1
    while m > 0 and Fraction(m * m) > value:
        m -= 1
    return m


def sqrt_upper_bound(value: Fraction) -> Fraction:
    """A rational s with s >= sqrt(value), off by less than 1/denominator."""
    if value < 0:
        raise ValueError("sqrt of a negative rational")
    a, b = value.numerator, value.denominator
    return Fraction(math.isqrt(a * b) + 1, b)
