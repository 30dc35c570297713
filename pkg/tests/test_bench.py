import numpy as np
import pytest

from gavekit.bench import (
    BENCH_CONDITIONS,
    BenchRow,
    CSV_HEADER,
    bench_conditions,
    ordering_holds,
    rows_to_csv,
    tridiag_problem,
    write_csv,
)
from gavekit.checkers import RHO_ABS_AINVB, ROW_DOM, SIGMA_AINVB
from gavekit.solvers import newton_solve


def alternating_vector(n):
    return np.where(np.arange(n) % 2 == 0, -1.0, 1.0)


class TestTridiagProblem:
    def test_smallest_instance(self):
        p = tridiag_problem(3)
        np.testing.assert_array_equal(
            p.A, [[8.0, -1.0, 0.0], [-1.0, 8.0, -1.0], [0.0, -1.0, 8.0]]
        )
        np.testing.assert_array_equal(p.B, np.eye(3))

    def test_rhs_encodes_alternating_solution(self):
        p = tridiag_problem(4)
        np.testing.assert_allclose(newton_solve(p), alternating_vector(4), atol=1e-10)

    def test_rejects_tiny_sizes(self):
        with pytest.raises(ValueError):
            tridiag_problem(2)


class TestBenchConditions:
    def test_small_size_rows_and_verdicts(self):
        rows = bench_conditions([8], repeats=1)
        assert [r.condition_id for r in rows] == list(BENCH_CONDITIONS)
        assert all(r.n == 8 for r in rows)
        assert all(r.seconds > 0 for r in rows)
        assert all(r.verdict_status == "Proved" for r in rows)

    def test_empty_sizes(self):
        assert bench_conditions([]) == []

    def test_repeats_validated(self):
        with pytest.raises(ValueError):
            bench_conditions([8], repeats=0)


class TestCsv:
    def test_format(self, tmp_path):
        rows = [
            BenchRow(600, RHO_ABS_AINVB, 0.75, "Proved"),
            BenchRow(600, SIGMA_AINVB, 0.11, "Proved"),
            BenchRow(600, ROW_DOM, 0.047, "Proved"),
        ]
        text = rows_to_csv(rows)
        lines = text.split("\n")
        assert lines[0] == CSV_HEADER
        assert lines[1] == "600,RHO_ABS_AINVB,0.750000,Proved"
        assert text.endswith("\n") and "\r" not in text
        path = tmp_path / "bench.csv"
        write_csv(rows, path)
        assert path.read_bytes().decode("utf-8") == text

    def test_ordering_helper(self):
        rows = [
            BenchRow(600, RHO_ABS_AINVB, 0.75, "Proved"),
            BenchRow(600, SIGMA_AINVB, 0.11, "Proved"),
            BenchRow(600, ROW_DOM, 0.047, "Proved"),
            BenchRow(2000, RHO_ABS_AINVB, 1.0, "Proved"),
            BenchRow(2000, SIGMA_AINVB, 2.0, "Proved"),
            BenchRow(2000, ROW_DOM, 0.5, "Proved"),
        ]
        assert ordering_holds(rows, 600)
        assert not ordering_holds(rows, 2000)
