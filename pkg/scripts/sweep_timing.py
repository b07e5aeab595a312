"""Wall-clock of the conjecture sweep per worker count, with a byte check.

    python scripts/sweep_timing.py --t-max 60 --workers 1 2 4 8
"""
import argparse
import time
from dataclasses import dataclass, field

from racahkit.racah import kt_sweep


@dataclass
class Config:
    t_min: int = 1
    t_max: int = 40
    workers: list[int] = field(default_factory=lambda: [1, 2, 8])


def main(cfg: Config) -> int:
    reference = None
    status = 0
    for k in cfg.workers:
        start = time.perf_counter()
        report = kt_sweep(cfg.t_min, cfg.t_max, k)
        elapsed = time.perf_counter() - start
        text = report.to_json()
        same = reference is None or text == reference
        reference = reference or text
        print(f"workers={k:<3d} {elapsed:8.2f}s  cells={report.cells_checked}  "
              f"violations={len(report.violations)}  identical={same}")
        if not same:
            status = 1
    return status


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--t-min", type=int, default=1)
    p.add_argument("--t-max", type=int, default=40)
    p.add_argument("--workers", type=int, nargs="+", default=[1, 2, 8])
    a = p.parse_args()
    raise SystemExit(main(Config(a.t_min, a.t_max, a.workers)))
