"""Exact terminating hypergeometric series, the tilde transform and its
inverse, Racah polynomials R_n(s, T), and exhaustive identity checks."""

from .errors import (
    DenominatorPole,
    DomainError,
    IndexOutOfRange,
    InvalidParams,
    InvalidRange,
    NonTerminating,
    ParseError,
    UsageError,
)
from .exact import binomial, format_rational, parse_rational, rising_factorial
from .hypergeom import HypSeriesSpec, chu_vandermonde, classify, evaluate_terminating, hyp
from .racah import (
    RacahParams,
    RacahSpecialParams,
    SweepReport,
    kt_sweep,
    kt_value,
    racah_general,
    racah_special,
)
from .suites import SuiteLimits, VerificationReport, run_all
from .transforms import (
    binomial_inverse,
    binomial_transform,
    inverse_transform,
    inversion_kernel,
    tilde_transform,
)

__version__ = "0.1.0"
