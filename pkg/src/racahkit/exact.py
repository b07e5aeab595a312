"""Exact rational scalars and the two combinatorial primitives.

Scalars are :class:`fractions.Fraction`, which already keeps a positive
denominator in lowest terms after every operation. Binomial coefficients are
returned as plain ``int`` (an exact integer-valued rational in the numeric
tower), which keeps the hot loops in integer arithmetic.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from .errors import ParseError

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def check_index(value, name="index"):
    """Return ``value`` if it is a non-negative ``int``; raise otherwise."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}")
    return value


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and canonical text to a Fraction.

    Floats are refused: a float has already lost the value it was meant to
    carry.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` (optionally signed) into a canonical Fraction.

    Decimal points, exponents and whitespace inside the token are rejected so
    that every accepted string denotes exactly one rational.
    """
    token = text.strip()
    if not _RATIONAL_RE.fullmatch(token):
        raise ParseError(f"not a rational in p/q form: {text!r}")
    num, _, den = token.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(value) -> str:
    """Canonical text: ``p/q`` in lowest terms with q > 0, or ``p`` if q = 1."""
    x = as_rational(value)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def approx_decimal(value, digits: int) -> str:
    """Round ``value`` half-to-even at ``digits`` places after the point."""
    check_index(digits, "digits")
    x = as_rational(value)
    scaled = round(x * 10**digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def is_nonpositive_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x.numerator <= 0


def rising_factorial(a: RationalLike, n: int) -> Fraction:
    """Pochhammer symbol (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.

    Returns an exact zero as soon as a zero factor is reachable, i.e. when
    ``a`` is an integer in [1-n, 0].
    """
    check_index(n, "n")
    a = as_rational(a)
    if n == 0:
        return Fraction(1)
    if is_nonpositive_integer(a) and -a.numerator < n:
        return Fraction(0)
    p, q = a.numerator, a.denominator
    num = 1
    for j in range(n):
        num *= p + j * q
    return Fraction(num, q**n)


def factorial(n: int) -> int:
    check_index(n, "n")
    out = 1
    for j in range(2, n + 1):
        out *= j
    return out


def binomial(n: int, k: int) -> int:
    """C(n, k) by the running product, with C(n, k) = 0 for k > n."""
    check_index(n, "n")
    check_index(k, "k")
    if k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        # out == C(n-k+i-1, i-1) here, so the division is exact
        out = out * (n - k + i) // i
    return out


def binomial_row(n: int) -> list[int]:
    """[C(n, 0), ..., C(n, n)] in O(n) multiplications."""
    check_index(n, "n")
    row = [1]
    for k in range(1, n + 1):
        row.append(row[-1] * (n - k + 1) // k)
    return row
