"""Brute-force reference computations, deliberately naive.

Nothing here imports racahkit: these are the independent side of every
oracle comparison.
"""
from fractions import Fraction
from math import comb, factorial


def poch(a, n):
    a = Fraction(a)
    out = Fraction(1)
    for j in range(n):
        out *= a + j
    return out


def pfq_direct(num, den, z, n):
    """First n+1 terms of pFq, each built from scratch with Pochhammer products."""
    total = Fraction(0)
    for k in range(n + 1):
        t = Fraction(z) ** k / factorial(k)
        for a in num:
            t *= poch(a, k)
        for b in den:
            t /= poch(b, k)
        total += t
    return total


def tilde_direct(x):
    return [
        sum((Fraction((-1) ** k * comb(n, k) * comb(n + k, k)) * x[k] for k in range(n + 1)),
            Fraction(0))
        for n in range(len(x))
    ]


def inverse_direct(xt):
    return [
        sum((Fraction((-1) ** k * (2 * k + 1) * comb(n, k), (n + k + 1) * comb(n + k, k)) * xt[k]
             for k in range(n + 1)), Fraction(0))
        for n in range(len(xt))
    ]


def racah_direct(n, s, T):
    return pfq_direct([-n, n + 1, -s, s + 1], [1, 1 - T, 1 + T], 1, min(n, s))


def solve_linear_inverse(xt):
    """Invert the lower-triangular tilde matrix by back substitution."""
    x = []
    for n in range(len(xt)):
        acc = Fraction(xt[n])
        for k in range(n):
            acc -= (-1) ** k * comb(n, k) * comb(n + k, k) * x[k]
        x.append(acc / ((-1) ** n * comb(2 * n, n)))
    return x
