"""Timing harness for the linear strategy precompute and the quadratic DP.

Absolute times are machine noise; what the suite checks is the fitted
growth exponent over a doubling series (log-log least squares).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .cuttings import cutting_15, extend_with_zeros, random_cutting
from .solver import solve_optimal
from .strategies import alice_dispatch


@dataclass(frozen=True)
class BenchResult:
    label: str
    points: tuple[tuple[int, float], ...]  # (n, median seconds)
    exponent: float

    def table(self) -> str:
        lines = [f"{self.label}", f"{'n':>9}  seconds"]
        for n, t in self.points:
            lines.append(f"{n:>9}  {t:.6f}")
        lines.append(f"fitted exponent: {self.exponent:.3f}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "points": [[n, t] for n, t in self.points],
            "exponent": self.exponent,
        }


def fit_exponent(points) -> float:
    """Least-squares slope of log(time) against log(n)."""
    xs = [math.log(n) for n, _ in points]
    ys = [math.log(max(t, 1e-9)) for _, t in points]
    k = len(xs)
    mx, my = sum(xs) / k, sum(ys) / k
    num = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    den = sum((x - mx) ** 2 for x in xs)
    return num / den


def _time_median(fn, repeat: int) -> float:
    times = []
    for _ in range(max(repeat, 1)):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    times.sort()
    return times[len(times) // 2]


def bench_precompute(min_exp: int = 10, max_exp: int = 20, repeat: int = 3) -> BenchResult:
    """Time the full strategy precompute on cuttings that exercise the
    partition path at every size (the 15-slice family padded with zeros)."""
    points = []
    for exp in range(min_exp, max_exp + 1):
        n = 2**exp + 1
        c = extend_with_zeros(cutting_15(0), n)
        reps = repeat if exp <= 15 else 1
        points.append((n, _time_median(lambda: alice_dispatch(c), reps)))
    return BenchResult("strategy precompute", tuple(points), fit_exponent(points))


def bench_dp(max_n: int = 2000, repeat: int = 1) -> BenchResult:
    """Time the full optimal-value table on random integer cuttings."""
    ns = [125, 250, 500, 1000, 2000]
    ns = [n for n in ns if n <= max_n] or [max_n]
    points = []
    for n in ns:
        c = random_cutting(n, 9, seed=n)
        points.append((n, _time_median(lambda: solve_optimal(c), repeat)))
    return BenchResult("optimal DP", tuple(points), fit_exponent(points))
