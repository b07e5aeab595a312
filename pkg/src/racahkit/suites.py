"""Exhaustive exact verification suites, one per identity.

Each suite sweeps a finite grid, compares both sides of an identity as exact
rationals, and returns a :class:`VerificationReport`. Suites never raise on a
mismatch; they record it. ``run_all`` never raises at all.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .errors import InvalidRange
from .exact import binomial_row, format_rational, parse_rational
from .racah import SCHEMA_VERSION, corollary320_lhs_row, corollary320_rhs
from .transforms import inverse_row, inversion_kernel, solve_fixed_point, tilde_transform

SUITE_NAMES = ("lemma340", "c310a", "c310b", "kernel", "c320")

# inclusive bounds on each suite's size parameter
LIMIT_BOUNDS = {
    "lemma340": (1, 5000),
    "c310a": (0, 400),
    "c310b": (0, 1000),
    "kernel": (0, 200),
    "c320": (1, 150),
}

FIXED_POINT_DEPTH = 32


@dataclass(frozen=True)
class SuiteLimits:
    lemma340: int = 500
    c310a: int = 64
    c310b: int = 200
    kernel: int = 48
    c320: int = 60

    @classmethod
    def minimal(cls) -> "SuiteLimits":
        return cls(**{name: LIMIT_BOUNDS[name][0] for name in SUITE_NAMES})

    def get(self, name: str) -> int:
        return getattr(self, name)


@dataclass
class Failure:
    params: dict
    lhs: Fraction
    rhs: Fraction

    def to_dict(self) -> dict:
        return {
            "params": dict(self.params),
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
        }


@dataclass
class VerificationReport:
    suite_name: str
    parameter_range: str
    cases_run: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    error: Optional[str] = None

    @property
    def status(self) -> str:
        if self.error is not None:
            return "errored"
        return "failed" if self.failures else "passed"

    @property
    def passed(self) -> bool:
        return self.status == "passed"

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "suite_name": self.suite_name,
            "status": self.status,
            "parameter_range": self.parameter_range,
            "cases_run": self.cases_run,
            "failures": [f.to_dict() for f in self.failures],
            "error": self.error,
        }
        if timing:
            d["elapsed"] = self.elapsed
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(
            suite_name=d["suite_name"],
            parameter_range=d["parameter_range"],
            cases_run=d["cases_run"],
            failures=[
                Failure(f["params"], parse_rational(f["lhs"]), parse_rational(f["rhs"]))
                for f in d["failures"]
            ],
            elapsed=d.get("elapsed", 0.0),
            error=d["error"],
        )


def reports_to_json(reports: list[VerificationReport], timing: bool = True) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "verification",
        "passed": all(r.passed for r in reports),
        "reports": [r.to_dict(timing) for r in reports],
    }
    return json.dumps(doc, indent=2) + "\n"


def reports_from_json(text: str) -> list[VerificationReport]:
    doc = json.loads(text)
    if doc.get("schema_version") != SCHEMA_VERSION or doc.get("kind") != "verification":
        raise ValueError("not a version-1 verification document")
    return [VerificationReport.from_dict(r) for r in doc["reports"]]


def _check_limit(name: str, value: int) -> None:
    lo, hi = LIMIT_BOUNDS[name]
    if isinstance(value, bool) or not isinstance(value, int) or not lo <= value <= hi:
        raise InvalidRange(f"{name}: limit must be an int in [{lo}, {hi}], got {value!r}")


class _Recorder:
    def __init__(self, name: str, parameter_range: str):
        self.report = VerificationReport(name, parameter_range)
        self._start = time.perf_counter()

    def check(self, params: dict, lhs, rhs) -> None:
        self.report.cases_run += 1
        if lhs != rhs:
            self.report.failures.append(Failure(params, Fraction(lhs), Fraction(rhs)))

    def extra(self, params: dict, lhs, rhs) -> None:
        """An additional assertion inside an already-counted case."""
        if lhs != rhs:
            self.report.failures.append(Failure(params, Fraction(lhs), Fraction(rhs)))

    def done(self) -> VerificationReport:
        self.report.elapsed = round(time.perf_counter() - self._start, 6)
        return self.report


# -- lemma ------------------------------------------------------------------

def lemma340_rhs(n: int) -> int:
    return (-1) ** (n - 1) * (2 * n + 1)


def suite_lemma340(
    n_max: int = 500, *, oracle: Callable[[int], int] = lemma340_rhs
) -> VerificationReport:
    """sum_{k<n} (-1)^k (2k+1) C(2n+1, n-k) = (-1)^(n-1) (2n+1), 1 <= n <= n_max.

    ``oracle`` replaces the right-hand side; tests use it to confirm that a
    corrupted identity is caught.
    """
    _check_limit("lemma340", n_max)
    rec = _Recorder("lemma340", f"1 <= n <= {n_max}")
    for n in range(1, n_max + 1):
        row = binomial_row(2 * n + 1)
        lhs = sum((-1) ** k * (2 * k + 1) * row[n - k] for k in range(n))
        rec.check({"n": n}, lhs, oracle(n))
    return rec.done()


# -- the inverse-kernel column sums and the 1/(2n+1) fixed point ------------

def c310a_lhs(n: int, m: int) -> Fraction:
    """sum_{k=m..n} (-1)^k (2k+1) C(n-m, k-m) / ((n+k+1) C(n+k, m+k))."""
    total = Fraction(0)
    top = 1  # C(n-m, k-m)
    bottom = 1  # C(n+k, m+k); at k = m this is C(n+m, n-m)
    for i in range(1, n - m + 1):
        bottom = bottom * (2 * m + i) // i
    for k in range(m, n + 1):
        term = Fraction((2 * k + 1) * top, (n + k + 1) * bottom)
        total += -term if k % 2 else term
        # C(n-m, k+1-m) = C(n-m, k-m)(n-k)/(k+1-m); C(n+k+1, m+k+1) = C(n+k, m+k)(n+k+1)/(m+k+1)
        top = top * (n - k) // (k + 1 - m)
        bottom = bottom * (n + k + 1) // (m + k + 1)
    return total


def suite_c310a(n_max: int = 64) -> VerificationReport:
    """Column sums of the inverse kernel against binomials, 0 <= m <= n <= n_max.

    The sum equals (-1)^n when m = n and 0 otherwise. Each m = 0 cell also
    checks the Pochhammer form sum_k (2k+1)(-n)_k / (n+1)_{k+1} = [n = 0].
    """
    _check_limit("c310a", n_max)
    rec = _Recorder("c310a", f"0 <= m <= n <= {n_max}")
    for n in range(n_max + 1):
        for m in range(n + 1):
            expected = (-1) ** n if m == n else 0
            rec.check({"n": n, "m": m}, c310a_lhs(n, m), expected)
        rec.extra({"n": n, "m": 0, "form": "pochhammer"}, sum(inverse_row(n)), 1 if n == 0 else 0)
    return rec.done()


def c310b_lhs(n: int) -> Fraction:
    """sum_k (-1)^k C(n,k) C(n+k,k) / (2k+1)."""
    total = Fraction(0)
    c_nk, c_npk = 1, 1
    for k in range(n + 1):
        term = Fraction(c_nk * c_npk, 2 * k + 1)
        total += -term if k % 2 else term
        c_nk = c_nk * (n - k) // (k + 1)
        c_npk = c_npk * (n + k + 1) // (k + 1)
    return total


def suite_c310b(n_max: int = 200) -> VerificationReport:
    """1/(2n+1) is fixed by the tilde transform, and is the only such prefix.

    The second part forward-solves the fixed-point equations from x_0 = 1 to
    depth min(n_max, 32) and compares entrywise.
    """
    _check_limit("c310b", n_max)
    depth = min(n_max, FIXED_POINT_DEPTH)
    rec = _Recorder("c310b", f"0 <= n <= {n_max}; fixed point 0 <= n <= {depth}")
    for n in range(n_max + 1):
        rec.check({"n": n}, c310b_lhs(n), Fraction(1, 2 * n + 1))
    for n, v in enumerate(solve_fixed_point(depth + 1)):
        rec.check({"n": n, "check": "fixed_point"}, v, Fraction(1, 2 * n + 1))
    return rec.done()


# -- kernel delta ------------------------------------------------------------

def suite_kernel_delta(n_max: int = 48) -> VerificationReport:
    """tilde_transform of n -> a_{n,m} is the unit vector e_m, 0 <= n, m <= n_max."""
    _check_limit("kernel", n_max)
    rec = _Recorder("kernel", f"0 <= n, m <= {n_max}")
    for m in range(n_max + 1):
        column = tilde_transform([inversion_kernel(n, m) for n in range(n_max + 1)])
        for n, v in enumerate(column):
            rec.check({"n": n, "m": m}, v, 1 if n == m else 0)
    return rec.done()


# -- inverse transform of the R_n(s, T) rows ---------------------------------

def _c320_block(T: int) -> list[tuple[dict, Fraction, Fraction, bool]]:
    """All (s, m) cells at one T as (params, lhs, rhs, in_band)."""
    out = []
    for s in range(T):
        row = corollary320_lhs_row(s, T)
        for m, lhs in enumerate(row):
            out.append(({"T": T, "s": s, "m": m}, lhs, corollary320_rhs(s, T, m), s + 1 <= m))
    return out


def suite_c320(t_max: int = 60, workers: int = 1) -> VerificationReport:
    """Inverse transform of n -> R_n(s, T) against its closed form.

    Covers 1 <= T <= t_max and 0 <= s, m <= T-1. Cells with s+1 <= m are
    additionally checked to vanish outright.
    """
    _check_limit("c320", t_max)
    if workers < 1:
        raise InvalidRange(f"workers must be >= 1, got {workers}")
    rec = _Recorder("c320", f"1 <= T <= {t_max}, 0 <= s, m <= T-1")
    Ts = list(range(1, t_max + 1))
    if workers == 1:
        blocks = [_c320_block(T) for T in Ts]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {T: pool.submit(_c320_block, T) for T in reversed(Ts)}
            blocks = [futures[T].result() for T in Ts]
    for block in blocks:
        for params, lhs, rhs, in_band in block:
            rec.check(params, lhs, rhs)
            if in_band:
                rec.extra({**params, "check": "band"}, lhs, 0)
    return rec.done()


SUITES: dict[str, Callable[..., VerificationReport]] = {
    "lemma340": suite_lemma340,
    "c310a": suite_c310a,
    "c310b": suite_c310b,
    "kernel": suite_kernel_delta,
    "c320": suite_c320,
}


def expected_cases(name: str, limit: int) -> int:
    """Closed-form ``cases_run`` for a suite at a given limit."""
    if name == "lemma340":
        return limit
    if name == "c310a":
        return (limit + 1) * (limit + 2) // 2
    if name == "c310b":
        return (limit + 1) + (min(limit, FIXED_POINT_DEPTH) + 1)
    if name == "kernel":
        return (limit + 1) ** 2
    if name == "c320":
        return limit * (limit + 1) * (2 * limit + 1) // 6
    raise KeyError(name)


def run_suite(name: str, limit: int, workers: int = 1) -> VerificationReport:
    if name not in SUITES:
        raise KeyError(name)
    if name == "c320":
        return SUITES[name](limit, workers=workers)
    return SUITES[name](limit)


def run_all(
    limits: Optional[SuiteLimits] = None,
    names: tuple[str, ...] = SUITE_NAMES,
    workers: int = 1,
) -> list[VerificationReport]:
    """Run suites in fixed order; an error in one becomes an errored report."""
    limits = limits or SuiteLimits()
    reports = []
    for name in SUITE_NAMES:
        if name not in names:
            continue
        limit = limits.get(name)
        try:
            reports.append(run_suite(name, limit, workers))
        except Exception as exc:  # isolation: one bad suite must not sink the batch
            reports.append(
                VerificationReport(name, f"limit={limit!r}", error=f"{type(exc).__name__}: {exc}")
            )
    return reports
