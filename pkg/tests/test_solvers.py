import numpy as np
import pytest

from gavekit.checkers import NORM_2, check_norm_bound
from gavekit.errors import GavmeColumnError, NoConvergenceError
from gavekit.model import PROVED, GaveProblem, GavmeProblem, is_solution, residual
from gavekit.solvers import gavme_solve, newton_solve, picard_solve

from fixtures import (
    MATRIX_RHS_SOLUTION,
    dominant_diagonal_problem,
    flat_ones_ave,
    matrix_rhs_problem,
    scalar_quarter_ave,
)
from gavekit.bench import tridiag_problem


class TestPicard:
    def test_dominant_fixture(self):
        x = picard_solve(dominant_diagonal_problem())
        np.testing.assert_allclose(x, [-2.0, 3.0], atol=1e-8)

    def test_large_tridiagonal(self):
        n = 600
        p = tridiag_problem(n)
        x = picard_solve(p)
        expected = np.where(np.arange(n) % 2 == 0, -1.0, 1.0)
        np.testing.assert_allclose(x, expected, atol=1e-8)

    def test_linear_case_single_step(self):
        p = GaveProblem([[2.0, 1.0], [0.0, 1.0]], np.zeros((2, 2)), [3.0, 1.0])
        x = picard_solve(p, maxit=1)
        np.testing.assert_allclose(x, [1.0, 1.0], atol=1e-12)

    def test_no_convergence_carries_last_iterate(self):
        # sigma(A^-1 B) = 2: the fixed-point map expands
        p = GaveProblem(np.eye(1), [[2.0]], [1.0])
        with pytest.raises(NoConvergenceError) as info:
            picard_solve(p, maxit=30)
        assert info.value.last_iterate is not None

    def test_contraction_regime_always_converges(self):
        rng = np.random.default_rng(53)
        verified = 0
        while verified < 25:
            n = int(rng.integers(1, 9))
            A = rng.normal(size=(n, n)) + 3.0 * np.eye(n)
            B = 0.8 * rng.normal(size=(n, n))
            if check_norm_bound(A, B, NORM_2).status != PROVED:
                continue
            for _ in range(50):
                b = rng.normal(size=n, scale=5.0)
                p = GaveProblem(A, B, b)
                assert is_solution(p, picard_solve(p), tol=1e-9)
            verified += 1


class TestNewton:
    def test_dominant_fixture_few_steps(self):
        x = newton_solve(dominant_diagonal_problem(), maxit=5)
        np.testing.assert_allclose(x, [-2.0, 3.0], atol=1e-10)

    def test_scalar_two_solution_instance(self):
        p = scalar_quarter_ave()
        x = newton_solve(p)
        assert is_solution(p, x, tol=1e-9)
        assert min(abs(x[0] - 20.0 / 3.0), abs(x[0] + 4.0)) < 1e-8

    def test_linear_case(self):
        p = GaveProblem(np.eye(2), np.zeros((2, 2)), [0.5, -0.5])
        np.testing.assert_allclose(newton_solve(p, maxit=1), [0.5, -0.5])

    def test_three_solution_instance_returns_valid_or_gives_up(self):
        p = flat_ones_ave()
        try:
            x = newton_solve(p)
        except NoConvergenceError:
            return
        assert is_solution(p, x, tol=1e-9)

    def test_large_tridiagonal(self):
        n = 600
        p = tridiag_problem(n)
        x = newton_solve(p)
        expected = np.where(np.arange(n) % 2 == 0, -1.0, 1.0)
        np.testing.assert_allclose(x, expected, atol=1e-10)


class TestGavme:
    def test_matrix_fixture_every_method(self):
        q = matrix_rhs_problem()
        for method in ("picard", "newton", "enumerate"):
            X = gavme_solve(q, method=method)
            np.testing.assert_allclose(X, MATRIX_RHS_SOLUTION, atol=1e-8)

    def test_zero_rhs_zero_solution(self):
        q = matrix_rhs_problem()
        zero = GavmeProblem(q.A, q.B, np.zeros((2, 2)))
        np.testing.assert_allclose(gavme_solve(zero, method="picard"),
                                   np.zeros((2, 2)), atol=1e-12)

    def test_single_column_matches_picard(self):
        q = matrix_rhs_problem()
        single = GavmeProblem(q.A, q.B, q.F[:, :1])
        X = gavme_solve(single, method="picard")
        x = picard_solve(q.column(0))
        np.testing.assert_allclose(X[:, 0], x, atol=1e-12)

    def test_enumeration_requires_unique_columns(self):
        # column with three solutions: enumeration refuses to pick one
        A = np.ones((2, 2))
        q = GavmeProblem(A, np.eye(2), [[-5.0], [-4.0]])
        with pytest.raises(GavmeColumnError) as info:
            gavme_solve(q, method="enumerate")
        assert info.value.column == 0

    def test_column_failure_is_annotated(self):
        # second column: B^-1 b >= 0 with expanding B, no solution exists
        A = np.array([[-3.0, 2.0], [-5.0, 1.0]])
        B = np.array([[-1.0, 7.0], [8.0, 2.0]])
        F = np.column_stack([np.zeros(2), [1.0, 5.0]])
        q = GavmeProblem(A, B, F)
        with pytest.raises(GavmeColumnError) as info:
            gavme_solve(q, method="newton", maxit=40)
        assert info.value.column == 1

    def test_solutions_satisfy_residual_contract(self):
        q = matrix_rhs_problem()
        X = gavme_solve(q, method="newton", tol=1e-12)
        for k in range(q.m):
            assert residual(q.column(k), X[:, k]) <= 1e-12 * (1 + np.max(np.abs(q.F)))
