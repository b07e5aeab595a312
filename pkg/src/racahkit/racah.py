"""Racah polynomials, the R_n(s, T) slice, and the |R_n(s, T)| <= 1 sweep.

R_n(s, T) = 4F3(-n, n+1, -s, s+1; 1, 1-T, 1+T; 1) for 0 <= n, s <= T-1.
All evaluation goes through :func:`racahkit.hypergeom.evaluate_terminating`.
"""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import DenominatorPole, IndexOutOfRange, InvalidParams, InvalidRange
from .exact import (
    RationalLike,
    as_rational,
    check_index,
    format_rational,
    parse_rational,
    rising_factorial,
)
from .hypergeom import HypSeriesSpec, evaluate_terminating
from .transforms import inverse_row, inverse_row_binomial

SCHEMA_VERSION = 1


def lambda_of(x: RationalLike, gamma: RationalLike, delta: RationalLike) -> Fraction:
    x = as_rational(x)
    return x * (x + as_rational(gamma) + as_rational(delta) + 1)


@dataclass(frozen=True)
class RacahParams:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction
    N: int

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        check_index(self.N, "N")
        if -self.N - 1 not in (self.alpha, self.beta + self.delta, self.gamma):
            raise InvalidParams(
                f"Racah side condition fails: none of alpha+1, beta+delta+1, gamma+1 "
                f"equals -N = {-self.N}"
            )

    @classmethod
    def kt_slice(cls, T: int) -> "RacahParams":
        """(alpha, beta, gamma, delta) = (0, 0, T, -T), active via beta+delta+1 = -(T-1)."""
        if T < 1:
            raise InvalidParams(f"T must be >= 1, got {T}")
        return cls(Fraction(0), Fraction(0), Fraction(T), Fraction(-T), T - 1)


def racah_general(params: RacahParams, n: int, x: int) -> Fraction:
    check_index(n, "n")
    check_index(x, "x")
    if n > params.N:
        raise IndexOutOfRange(f"degree n = {n} exceeds N = {params.N}")
    a, b, c, d = params.alpha, params.beta, params.gamma, params.delta
    spec = HypSeriesSpec(
        (-n, n + a + b + 1, -x, x + c + d + 1),
        (a + 1, b + d + 1, c + 1),
        Fraction(1),
    )
    return evaluate_terminating(spec)


@dataclass(frozen=True)
class RacahSpecialParams:
    n: int
    s: int
    T: int

    def __post_init__(self):
        for name in ("n", "s", "T"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvalidParams(f"{name} must be an int, got {v!r}")
        if self.T < 1:
            raise InvalidParams(f"T must be >= 1, got {self.T}")
        if not (0 <= self.n <= self.T - 1 and 0 <= self.s <= self.T - 1):
            raise InvalidParams(
                f"need 0 <= n, s <= T-1; got n={self.n}, s={self.s}, T={self.T}"
            )

    def spec(self) -> HypSeriesSpec:
        n, s, T = self.n, self.s, self.T
        return HypSeriesSpec((-n, n + 1, -s, s + 1), (1, 1 - T, 1 + T), Fraction(1))


def racah_special(p: RacahSpecialParams) -> Fraction:
    return evaluate_terminating(p.spec())


def kt_value(n: int, s: int, T: int) -> Fraction:
    """Shorthand for ``racah_special(RacahSpecialParams(n, s, T))``."""
    return racah_special(RacahSpecialParams(n, s, T))


def racah_table(T: int) -> list[list[Fraction]]:
    """The T x T grid, rows n and columns s, filled by n <-> s symmetry."""
    RacahSpecialParams(0, 0, T)
    grid = [[Fraction(0)] * T for _ in range(T)]
    for n in range(T):
        for s in range(n, T):
            grid[n][s] = grid[s][n] = kt_value(n, s, T)
    return grid


# -- inverse transform of the R_n(s, T) rows ---------------------------------

def _check_cell(s: int, T: int, m: int) -> None:
    for name, v in (("s", s), ("T", T), ("m", m)):
        if isinstance(v, bool) or not isinstance(v, int):
            raise InvalidParams(f"{name} must be an int, got {v!r}")
    if T < 1 or not (0 <= s <= T - 1) or m < 0:
        raise InvalidParams(f"need T >= 1, 0 <= s <= T-1, m >= 0; got s={s}, T={T}, m={m}")


def corollary320_rhs(s: int, T: int, m: int) -> Fraction:
    """(-s)_m (s+1)_m / ((1-T)_m (1+T)_m)."""
    _check_cell(s, T, m)
    if m >= T:
        raise DenominatorPole(f"(1-T)_m = 0 for m = {m} >= T = {T}")
    return (rising_factorial(-s, m) * rising_factorial(s + 1, m)) / (
        rising_factorial(1 - T, m) * rising_factorial(1 + T, m)
    )


def _lhs_both(m: int, values: list[Fraction]) -> Fraction:
    """Binomial-form and Pochhammer-form sums over values[0..m]; must agree."""
    binom = sum((c * v for c, v in zip(inverse_row_binomial(m), values)), Fraction(0))
    poch = sum((c * v for c, v in zip(inverse_row(m), values)), Fraction(0))
    if binom != poch:
        raise ArithmeticError(
            f"binomial and Pochhammer forms disagree at m={m}: {binom} != {poch}"
        )
    return poch


def corollary320_lhs(s: int, T: int, m: int) -> Fraction:
    """sum_{n<=m} (-1)^n (2n+1) C(m,n) / ((m+n+1) C(m+n,n)) R_n(s, T)."""
    _check_cell(s, T, m)
    if m > T - 1:
        raise InvalidParams(f"need m <= T-1; got m={m}, T={T}")
    values = [kt_value(n, s, T) for n in range(m + 1)]
    return _lhs_both(m, values)


def corollary320_lhs_row(s: int, T: int) -> list[Fraction]:
    """corollary320_lhs(s, T, m) for every m = 0..T-1, sharing the R_n values."""
    _check_cell(s, T, 0)
    values = [kt_value(n, s, T) for n in range(T)]
    return [_lhs_both(m, values) for m in range(T)]


# -- conjecture sweep ------------------------------------------------------

Cell = tuple[int, int, int]  # (n, s, T)


@dataclass
class SweepReport:
    t_min: int
    t_max: int
    cells_checked: int
    max_abs_value: Fraction
    witness: Cell
    violations: list[tuple[int, int, int, Fraction]] = field(default_factory=list)
    grid: Optional[dict[int, list[list[Fraction]]]] = field(
        default=None, repr=False, compare=False
    )

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        n, s, T = self.witness
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "sweep",
            "t_range": [self.t_min, self.t_max],
            "cells_checked": self.cells_checked,
            "max_abs_value": format_rational(self.max_abs_value),
            "witness": {"n": n, "s": s, "T": T},
            "violations": [
                {"n": vn, "s": vs, "T": vT, "value": format_rational(v)}
                for vn, vs, vT, v in self.violations
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "SweepReport":
        if d.get("schema_version") != SCHEMA_VERSION or d.get("kind") != "sweep":
            raise ValueError("not a version-1 sweep report")
        w = d["witness"]
        return cls(
            t_min=d["t_range"][0],
            t_max=d["t_range"][1],
            cells_checked=d["cells_checked"],
            max_abs_value=parse_rational(d["max_abs_value"]),
            witness=(w["n"], w["s"], w["T"]),
            violations=[
                (v["n"], v["s"], v["T"], parse_rational(v["value"])) for v in d["violations"]
            ],
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["kind", "T", "n", "s", "value", "t_min", "t_max", "cells_checked"])
        for n, s, T, v in self.violations:
            w.writerow(["violation", T, n, s, format_rational(v), "", "", ""])
        n, s, T = self.witness
        w.writerow(
            ["summary", T, n, s, format_rational(self.max_abs_value),
             self.t_min, self.t_max, self.cells_checked]
        )
        return buf.getvalue()

    def grid_csv(self) -> str:
        if self.grid is None:
            raise ValueError("sweep was run without keep_grid")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["T", "n", "s", "value"])
        for T in sorted(self.grid):
            for n, row in enumerate(self.grid[T]):
                for s, v in enumerate(row):
                    w.writerow([T, n, s, format_rational(v)])
        return buf.getvalue()


@dataclass
class _TResult:
    T: int
    max_abs: Fraction
    witness: tuple[int, int]
    violations: list[tuple[int, int, int, Fraction]]
    grid: Optional[list[list[Fraction]]]


def _sweep_one(T: int, keep_grid: bool) -> _TResult:
    best, witness = Fraction(-1), (0, 0)
    violations = []
    grid = [[Fraction(0)] * T for _ in range(T)] if keep_grid else None
    # (n, s) with n <= s visited in lexicographic order, so the first strict
    # maximum is also the lexicographically smallest witness on the full grid.
    for n in range(T):
        for s in range(n, T):
            v = kt_value(n, s, T)
            a = abs(v)
            if a > best:
                best, witness = a, (n, s)
            if a > 1:
                violations.append((n, s, T, v))
                if n != s:
                    violations.append((s, n, T, v))
            if grid is not None:
                grid[n][s] = grid[s][n] = v
    violations.sort(key=lambda c: (c[2], c[0], c[1]))
    return _TResult(T, best, witness, violations, grid)


def kt_sweep(t_min: int, t_max: int, workers: int = 1, *, keep_grid: bool = False) -> SweepReport:
    """Check |R_n(s, T)| <= 1 on every cell with t_min <= T <= t_max.

    Work is split by T, largest first; results are merged in ascending T so
    the report does not depend on ``workers``. Violations are reported, never
    raised.
    """
    for name, v in (("t_min", t_min), ("t_max", t_max), ("workers", workers)):
        if isinstance(v, bool) or not isinstance(v, int):
            raise InvalidRange(f"{name} must be an int, got {v!r}")
    if not 1 <= t_min <= t_max:
        raise InvalidRange(f"need 1 <= t_min <= t_max; got t_min={t_min}, t_max={t_max}")
    if workers < 1:
        raise InvalidRange(f"workers must be >= 1, got {workers}")

    order = list(range(t_max, t_min - 1, -1))
    if workers == 1:
        results = [_sweep_one(T, keep_grid) for T in order]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_sweep_one, T, keep_grid) for T in order]
            results = [f.result() for f in futures]
    results.sort(key=lambda r: r.T)

    best, witness = Fraction(-1), (0, 0, t_min)
    violations = []
    for r in results:
        if r.max_abs > best:
            best, witness = r.max_abs, (r.witness[0], r.witness[1], r.T)
        violations.extend(r.violations)
    return SweepReport(
        t_min=t_min,
        t_max=t_max,
        cells_checked=sum(T * T for T in range(t_min, t_max + 1)),
        max_abs_value=best,
        witness=witness,
        violations=violations,
        grid={r.T: r.grid for r in results} if keep_grid else None,
    )
