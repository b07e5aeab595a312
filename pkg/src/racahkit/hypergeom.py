"""Terminating generalized hypergeometric series with exact evaluation.

A series pFq(a_1..a_p; b_1..b_q; z) terminates when some numerator parameter
is a non-positive integer -n; the largest such parameter fixes the
truncation index n and the series is then a polynomial of degree n in z.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .errors import DenominatorPole, NonTerminating
from .exact import (
    RationalLike,
    as_rational,
    format_rational,
    is_nonpositive_integer,
    rising_factorial,
)


def _as_params(values: Sequence[RationalLike]) -> tuple[Fraction, ...]:
    return tuple(as_rational(v) for v in values)


@dataclass(frozen=True)
class HypSeriesSpec:
    numerator_params: tuple[Fraction, ...] = ()
    denominator_params: tuple[Fraction, ...] = ()
    argument: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "numerator_params", _as_params(self.numerator_params))
        object.__setattr__(self, "denominator_params", _as_params(self.denominator_params))
        object.__setattr__(self, "argument", as_rational(self.argument))

    @property
    def p(self) -> int:
        return len(self.numerator_params)

    @property
    def q(self) -> int:
        return len(self.denominator_params)

    def __str__(self):
        num = ", ".join(map(format_rational, self.numerator_params))
        den = ", ".join(map(format_rational, self.denominator_params))
        return f"{self.p}F{self.q}({num}; {den}; {format_rational(self.argument)})"


def hyp(num: Sequence[RationalLike], den: Sequence[RationalLike], z: RationalLike = 1) -> HypSeriesSpec:
    return HypSeriesSpec(tuple(num), tuple(den), z)


@dataclass(frozen=True)
class SeriesClassification:
    terminating: bool
    truncation_index: Optional[int]
    denominator_valid: bool
    saalschutzian: bool
    unit_argument: bool
    offending_denominator: Optional[Fraction] = field(default=None, compare=False)

    def to_dict(self) -> dict:
        return {
            "terminating": self.terminating,
            "truncation_index": self.truncation_index,
            "denominator_valid": self.denominator_valid,
            "saalschutzian": self.saalschutzian,
            "unit_argument": self.unit_argument,
        }


def _first_pole(den: Sequence[Fraction], n: Optional[int]) -> Optional[Fraction]:
    """First denominator parameter that makes some (b)_k vanish for k <= n.

    ``n=None`` means no truncation, so any non-positive integer is a pole.
    """
    for b in den:
        if is_nonpositive_integer(b) and (n is None or -b.numerator <= n - 1):
            return b
    return None


def classify(spec: HypSeriesSpec) -> SeriesClassification:
    truncating = [-a.numerator for a in spec.numerator_params if is_nonpositive_integer(a)]
    n = min(truncating) if truncating else None
    pole = _first_pole(spec.denominator_params, n)
    return SeriesClassification(
        terminating=n is not None,
        truncation_index=n,
        denominator_valid=pole is None,
        saalschutzian=sum(spec.denominator_params, Fraction(0))
        - sum(spec.numerator_params, Fraction(0))
        == 1,
        unit_argument=spec.argument == 1,
        offending_denominator=pole,
    )


def _require_evaluable(spec: HypSeriesSpec) -> int:
    c = classify(spec)
    if not c.terminating:
        raise NonTerminating(
            f"non-terminating series {spec}: no numerator parameter is a non-positive integer"
        )
    if not c.denominator_valid:
        raise DenominatorPole(
            f"denominator parameter {format_rational(c.offending_denominator)} in {spec} "
            f"is an integer in [{1 - c.truncation_index}, 0]; (b)_k vanishes before the "
            f"series truncates at k = {c.truncation_index}"
        )
    return c.truncation_index


def _ratio_factors(spec: HypSeriesSpec, k: int) -> tuple[int, int]:
    """Integer pair (u, v) with term_k / term_{k-1} = u / v, unreduced.

    Parameters a = p/q enter as (a + k - 1) = (p + (k-1) q) / q, so the
    parameter denominators are folded into the pair without any gcd.
    """
    z = spec.argument
    u, v = z.numerator, z.denominator * k
    for a in spec.numerator_params:
        u *= a.numerator + (k - 1) * a.denominator
        v *= a.denominator
    for b in spec.denominator_params:
        v *= b.numerator + (k - 1) * b.denominator
        u *= b.denominator
    return u, v


def series_terms(spec: HypSeriesSpec) -> Iterator[Fraction]:
    """Yield the n+1 nonzero-range terms, each from its predecessor by the ratio."""
    n = _require_evaluable(spec)
    term = Fraction(1)
    yield term
    for k in range(1, n + 1):
        u, v = _ratio_factors(spec, k)
        term = term * Fraction(u, v)
        yield term


def evaluate_terminating(spec: HypSeriesSpec) -> Fraction:
    """Exact value of a terminating pFq.

    Uses the nested form 1 + r_1 (1 + r_2 (1 + ... r_n)) over unreduced
    integer pairs, one ratio update per term and a single gcd at the end.
    """
    n = _require_evaluable(spec)
    if spec.argument == 0:
        return Fraction(1)
    acc_num, acc_den = 1, 1
    for k in range(n, 0, -1):
        u, v = _ratio_factors(spec, k)
        acc_num, acc_den = v * acc_den + u * acc_num, v * acc_den
    return Fraction(acc_num, acc_den)


def chu_vandermonde(n: int, a: RationalLike, b: RationalLike) -> Fraction:
    """Closed form (b-a)_n / (b)_n of 2F1(-n, a; b; 1)."""
    a, b = as_rational(a), as_rational(b)
    if _first_pole((b,), n) is not None:
        raise DenominatorPole(
            f"b = {format_rational(b)} is an integer in [{1 - n}, 0]; (b)_{n} = 0"
        )
    return rising_factorial(b - a, n) / rising_factorial(b, n)
