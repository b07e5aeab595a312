"""Largest |R_n(s, T)| away from the trivial rows n = 0 and s = 0.

The boundary cells are identically 1, so the interior maximum is the number
that tells how much room the bound |R_n(s, T)| <= 1 actually has at each T.

    python scripts/interior_extremes.py --t-max 40 > interior.csv
"""
import argparse
import csv
import sys
from dataclasses import dataclass
from fractions import Fraction

from racahkit.exact import approx_decimal, format_rational
from racahkit.racah import kt_value


@dataclass
class Config:
    t_min: int = 2
    t_max: int = 30
    digits: int = 8


def interior_max(T: int) -> tuple[Fraction, int, int]:
    best, where = Fraction(-1), (1, 1)
    for n in range(1, T):
        for s in range(n, T):
            v = abs(kt_value(n, s, T))
            if v > best:
                best, where = v, (n, s)
    return best, *where


def main(cfg: Config) -> None:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["T", "n", "s", "max_abs_interior", "approx"])
    for T in range(cfg.t_min, cfg.t_max + 1):
        v, n, s = interior_max(T)
        w.writerow([T, n, s, format_rational(v), approx_decimal(v, cfg.digits)])


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--t-min", type=int, default=Config.t_min)
    p.add_argument("--t-max", type=int, default=Config.t_max)
    p.add_argument("--digits", type=int, default=Config.digits)
    a = p.parse_args()
    if a.t_min < 2 or a.t_max < a.t_min:
        p.error("need 2 <= t-min <= t-max (T = 1 has no interior)")
    main(Config(a.t_min, a.t_max, a.digits))
