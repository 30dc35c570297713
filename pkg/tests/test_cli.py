import json

import numpy as np

from gavekit.cli import main
from gavekit.model import load_problem, problem_to_json_dict

from fixtures import (
    dominant_diagonal_problem,
    flat_ones_ave,
    matrix_rhs_problem,
    no_solution_problem,
)


def write_problem(tmp_path, problem, name="problem.json"):
    path = tmp_path / name
    path.write_text(json.dumps(problem_to_json_dict(problem)))
    return str(path)


class TestCheck:
    def test_dominant_fixture_exit_and_summary(self, tmp_path, capsys):
        path = write_problem(tmp_path, dominant_diagonal_problem())
        assert main(["check", path]) == 0
        out = capsys.readouterr().out
        assert "summary: UniqueForAllB" in out
        assert "ROW_DOM" in out

    def test_no_solution_fixture(self, tmp_path, capsys):
        path = write_problem(tmp_path, no_solution_problem())
        assert main(["check", path]) == 0
        assert "summary: NoSolutionForGivenB" in capsys.readouterr().out

    def test_nothing_established_exit_code(self, tmp_path, capsys):
        # B^-1 b has a negative entry and every uniqueness condition fails
        path = write_problem(tmp_path, flat_ones_ave((1.0, -4.0)))
        code = main(["check", path, "--conditions", "SV_PLAIN,UNSOLV_DIRECT"])
        assert code == 2

    def test_json_output_reparses(self, tmp_path, capsys):
        path = write_problem(tmp_path, dominant_diagonal_problem())
        assert main(["check", path, "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert set(report) == {"problem", "verdicts", "summary"}
        for v in report["verdicts"]:
            assert set(v) == {"id", "claim", "status", "soundness", "certificate"}
            assert all(isinstance(x, float) for x in v["certificate"].values())
        assert report["summary"] == "UniqueForAllB"

    def test_malformed_json_exit_1(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        assert main(["check", str(path)]) == 1
        assert "error" in capsys.readouterr().err

    def test_dimension_mismatch_named(self, tmp_path, capsys):
        path = tmp_path / "mismatch.json"
        path.write_text(json.dumps({"A": [[1.0, 0.0], [0.0, 1.0]],
                                    "B": [[1.0]], "b": [1.0, 2.0]}))
        assert main(["check", str(path)]) == 1
        assert "B" in capsys.readouterr().err

    def test_unknown_condition_exit_1(self, tmp_path, capsys):
        path = write_problem(tmp_path, dominant_diagonal_problem())
        assert main(["check", path, "--conditions", "NOT_A_CHECKER"]) == 1

    def test_matrix_problem_rejected(self, tmp_path, capsys):
        path = write_problem(tmp_path, matrix_rhs_problem())
        assert main(["check", path]) == 1


class TestSolve:
    def test_newton_on_dominant_fixture(self, tmp_path, capsys):
        path = write_problem(tmp_path, dominant_diagonal_problem())
        assert main(["solve", path, "--method", "newton"]) == 0
        out = capsys.readouterr().out
        assert "-2" in out and "3" in out

    def test_picard_on_matrix_problem(self, tmp_path, capsys):
        path = write_problem(tmp_path, matrix_rhs_problem())
        assert main(["solve", path, "--method", "picard"]) == 0
        out = capsys.readouterr().out
        assert "X =" in out

    def test_gavme_alias(self, tmp_path, capsys):
        path = write_problem(tmp_path, matrix_rhs_problem())
        assert main(["gavme", path, "--method", "newton"]) == 0

    def test_three_solution_instance_never_prints_a_non_solution(self, tmp_path, capsys):
        from gavekit.model import is_solution

        path = write_problem(tmp_path, flat_ones_ave())
        code = main(["solve", path, "--method", "newton"])
        out = capsys.readouterr().out
        assert code in (0, 3)
        if code == 0:
            printed = out.splitlines()[0]
            values = [float(v) for v in printed.strip("x = ()").split(",")]
            assert is_solution(flat_ones_ave(), values, tol=1e-8)

    def test_no_convergence_exit_3(self, tmp_path, capsys):
        path = tmp_path / "expanding.json"
        path.write_text(json.dumps({"A": [[1.0]], "B": [[2.0]], "b": [1.0]}))
        assert main(["solve", str(path), "--method", "picard", "--maxit", "25"]) == 3


class TestEnumerate:
    def test_three_solutions(self, tmp_path, capsys):
        path = write_problem(tmp_path, flat_ones_ave())
        assert main(["enumerate", path]) == 0
        out = capsys.readouterr().out
        assert "3 solution(s)" in out
        assert "degenerate orthants: 0" in out

    def test_zero_solutions(self, tmp_path, capsys):
        path = write_problem(tmp_path, no_solution_problem())
        assert main(["enumerate", path]) == 0
        assert "0 solution(s)" in capsys.readouterr().out

    def test_cap_exit_4(self, tmp_path, capsys):
        big = {"A": (3.0 * np.eye(13)).tolist(), "b": [1.0] * 13}
        path = tmp_path / "big.json"
        path.write_text(json.dumps(big))
        assert main(["enumerate", str(path)]) == 4
        assert main(["enumerate", str(path), "--cap", "13"]) == 0


class TestBench:
    def test_small_sizes_csv_file(self, tmp_path, capsys):
        out = tmp_path / "bench.csv"
        assert main(["bench", "--sizes", "10", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "n,condition,seconds,status"
        assert len(lines) == 4
        assert "ordering not asserted" in capsys.readouterr().out

    def test_csv_to_stdout(self, capsys):
        assert main(["bench", "--sizes", "8,10"]) == 0
        captured = capsys.readouterr()
        assert captured.out.startswith("n,condition,seconds,status")
        assert len(captured.out.splitlines()) == 7

    def test_bad_sizes_exit_1(self, capsys):
        assert main(["bench", "--sizes", "abc"]) == 1
        assert main(["bench", "--sizes", "2"]) == 1


class TestRoundTrip:
    def test_serialized_problem_keeps_digest(self, tmp_path):
        p = dominant_diagonal_problem()
        path = write_problem(tmp_path, p)
        assert load_problem(path).digest() == p.digest()
