"""The tilde transform, its inverse, and the classical binomial transform.

Sequences are finite prefixes x_0..x_{L-1} held as tuples of Fractions; every
map here is lower-triangular and length-preserving, so entry n of the output
depends only on x_0..x_n.

    tilde:    xt_n = sum_k (-1)^k C(n,k) C(n+k,k) x_k
    inverse:  x_n  = sum_k (2k+1) (-n)_k / (n+1)_{k+1} xt_k
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence as _Seq

from .exact import (
    RationalLike,
    as_rational,
    binomial,
    binomial_row,
    check_index,
    factorial,
    rising_factorial,
)

Sequence = tuple[Fraction, ...]


def as_sequence(values: Iterable[RationalLike]) -> Sequence:
    return tuple(as_rational(v) for v in values)


class _Scaled:
    """A sequence over one common denominator: x_k = nums[k] / den."""

    __slots__ = ("nums", "den")

    def __init__(self, x: Sequence):
        den = lcm(*(v.denominator for v in x)) if x else 1
        self.den = den
        self.nums = [v.numerator * (den // v.denominator) for v in x]

    def dot_int(self, coeffs: _Seq[int]) -> Fraction:
        return Fraction(sum(c * p for c, p in zip(coeffs, self.nums)), self.den)

    def dot(self, coeffs: _Seq[Fraction]) -> Fraction:
        row_den = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
        total = sum(
            c.numerator * (row_den // c.denominator) * p for c, p in zip(coeffs, self.nums)
        )
        return Fraction(total, row_den * self.den)


# -- coefficient rows -------------------------------------------------------

@lru_cache(maxsize=512)
def tilde_row(n: int) -> tuple[int, ...]:
    """Integer coefficients (-1)^k C(n,k) C(n+k,k), k = 0..n."""
    row = []
    c_nk, c_npk = 1, 1
    for k in range(n + 1):
        row.append(-c_nk * c_npk if k % 2 else c_nk * c_npk)
        # C(n,k+1) = C(n,k)(n-k)/(k+1);  C(n+k+1,k+1) = C(n+k,k)(n+k+1)/(k+1)
        c_nk = c_nk * (n - k) // (k + 1)
        c_npk = c_npk * (n + k + 1) // (k + 1)
    return tuple(row)


@lru_cache(maxsize=512)
def tilde_row_pochhammer(n: int) -> tuple[Fraction, ...]:
    """Coefficients (-n)_k (n+1)_k / (k! k!) from the Pochhammer symbols directly."""
    return tuple(
        rising_factorial(-n, k) * rising_factorial(n + 1, k) / factorial(k) ** 2
        for k in range(n + 1)
    )


@lru_cache(maxsize=512)
def inverse_row(n: int) -> tuple[Fraction, ...]:
    """Coefficients (2k+1)(-n)_k / (n+1)_{k+1}, each from its predecessor.

    c_0 = 1/(n+1) and c_{k+1} / c_k = (2k+3)(k-n) / ((2k+1)(n+k+2)).
    """
    row = [Fraction(1, n + 1)]
    for k in range(n):
        row.append(row[-1] * Fraction((2 * k + 3) * (k - n), (2 * k + 1) * (n + k + 2)))
    return tuple(row)


@lru_cache(maxsize=512)
def inverse_row_binomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients (-1)^k (2k+1) C(n,k) / ((n+k+1) C(n+k,k)) term by term."""
    return tuple(
        Fraction((-1) ** k * (2 * k + 1) * binomial(n, k), (n + k + 1) * binomial(n + k, k))
        for k in range(n + 1)
    )


def inversion_kernel(n: int, m: int) -> Fraction:
    """a_{n,m} = (2m+1)(-n)_m / (n+1)_{m+1}; zero for m > n."""
    check_index(n, "n")
    check_index(m, "m")
    if m > n:
        return Fraction(0)
    return (2 * m + 1) * rising_factorial(-n, m) / rising_factorial(n + 1, m + 1)


# -- transforms -------------------------------------------------------------

def tilde_transform(x: Iterable[RationalLike]) -> Sequence:
    xs = _Scaled(as_sequence(x))
    return tuple(xs.dot_int(tilde_row(n)) for n in range(len(xs.nums)))


def tilde_transform_pochhammer(x: Iterable[RationalLike]) -> Sequence:
    xs = _Scaled(as_sequence(x))
    return tuple(xs.dot(tilde_row_pochhammer(n)) for n in range(len(xs.nums)))


def inverse_transform(xt: Iterable[RationalLike]) -> Sequence:
    xs = _Scaled(as_sequence(xt))
    return tuple(xs.dot(inverse_row(n)) for n in range(len(xs.nums)))


def inverse_transform_binomial(xt: Iterable[RationalLike]) -> Sequence:
    xs = _Scaled(as_sequence(xt))
    return tuple(xs.dot(inverse_row_binomial(n)) for n in range(len(xs.nums)))


def binomial_transform(x: Iterable[RationalLike]) -> Sequence:
    """xh_n = sum_k (-1)^k C(n,k) x_k."""
    xs = _Scaled(as_sequence(x))
    out = []
    for n in range(len(xs.nums)):
        row = binomial_row(n)
        out.append(xs.dot_int([-c if k % 2 else c for k, c in enumerate(row)]))
    return tuple(out)


def binomial_inverse(xh: Iterable[RationalLike]) -> Sequence:
    # the signed binomial transform is an involution
    return binomial_transform(xh)


def solve_fixed_point(length: int, x0: RationalLike = 1) -> Sequence:
    """The unique prefix with tilde_transform(x) == x and the given x_0.

    Entry n solves x_n (1 - d_n) = sum_{k<n} c_{n,k} x_k, where the diagonal
    coefficient d_n = (-1)^n C(2n,n) differs from 1 for every n > 0.
    """
    check_index(length, "length")
    if length == 0:
        return ()
    x = [as_rational(x0)]
    for n in range(1, length):
        row = tilde_row(n)
        rest = sum((c * v for c, v in zip(row, x)), Fraction(0))
        x.append(rest / (1 - row[n]))
    return tuple(x)
