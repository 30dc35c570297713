"""Timing harness for the three cheap-to-expensive uniqueness conditions.

On the tridiagonal family (diagonal 8, off-diagonals -1, B = I) it times
the Perron-root check, the sigma_max(A^{-1}B) check, and the row-dominance
scan through their generic dense code paths; no tridiagonal shortcuts.
Timed sections run single-threaded so the comparison is about algorithmic
cost, not BLAS parallelism.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np
from threadpoolctl import threadpool_limits

from .checkers import RHO_ABS_AINVB, ROW_DOM, SIGMA_AINVB, check_row_dominance, check_spectral
from .model import GaveProblem

BENCH_CONDITIONS = (RHO_ABS_AINVB, SIGMA_AINVB, ROW_DOM)
DEFAULT_SIZES = (600, 2000)
FULL_SIZES = (600, 2000, 3000, 4000, 5000)

# timing-order assertions are meaningless in noise below this size
ORDERING_MIN_N = 600

CSV_HEADER = "n,condition,seconds,status"


@dataclass(frozen=True)
class BenchRow:
    n: int
    condition_id: str
    seconds: float
    verdict_status: str


def tridiag_problem(n: int) -> GaveProblem:
    """The benchmark family: A = tridiag(-1, 8, -1), B = I, and b chosen so
    the alternating vector (-1, 1, ..., -1, 1) is the solution."""
    if n < 3:
        raise ValueError(f"the tridiagonal family needs n >= 3, got {n}")
    A = 8.0 * np.eye(n)
    idx = np.arange(n - 1)
    A[idx, idx + 1] = -1.0
    A[idx + 1, idx] = -1.0
    x_star = np.where(np.arange(n) % 2 == 0, -1.0, 1.0)
    b = A @ x_star - np.ones(n)  # B |x*| = 1 for the alternating vector
    return GaveProblem(A, np.eye(n), b)


def _condition_thunk(p: GaveProblem, condition_id: str):
    if condition_id == ROW_DOM:
        return lambda: check_row_dominance(p.A, p.B)
    return lambda: check_spectral(p.A, p.B, condition_id)


def bench_conditions(sizes, repeats: int = 3) -> list[BenchRow]:
    """Median wall-clock seconds per (size, condition), single-threaded.

    Each condition gets one untimed warmup run, then the median of
    `repeats` timed runs; the verdict of the last run is recorded.
    """
    if repeats < 1:
        raise ValueError("repeats must be at least 1")
    rows = []
    for n in sizes:
        p = tridiag_problem(int(n))
        for cid in BENCH_CONDITIONS:
            thunk = _condition_thunk(p, cid)
            with threadpool_limits(limits=1):
                thunk()  # warmup
                samples = []
                for _ in range(repeats):
                    start = time.perf_counter()
                    verdict = thunk()
                    samples.append(time.perf_counter() - start)
            rows.append(BenchRow(int(n), cid, statistics.median(samples), verdict.status))
    return rows


def rows_to_csv(rows) -> str:
    lines = [CSV_HEADER]
    lines.extend(
        f"{r.n},{r.condition_id},{r.seconds:.6f},{r.verdict_status}" for r in rows
    )
    return "\n".join(lines) + "\n"


def write_csv(rows, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(rows_to_csv(rows))


def ordering_holds(rows, n: int) -> bool:
    """Whether time(ROW_DOM) < time(SIGMA_AINVB) < time(RHO_ABS_AINVB) at n."""
    spent = {r.condition_id: r.seconds for r in rows if r.n == n}
    return spent[ROW_DOM] < spent[SIGMA_AINVB] < spent[RHO_ABS_AINVB]
