"""Shared numeric fixtures with known exact behavior."""

import numpy as np

from gavekit.model import GaveProblem, GavmeProblem, ave_view


def dominant_diagonal_problem() -> GaveProblem:
    """2x2 problem whose A-row dominance proves uniqueness while all four
    singular-value conditions fail; unique solution (-2, 3)."""
    A = [[1.0200, 0.0], [0.0, 1.2003]]
    B = [[-0.8999, 0.1009], [-0.3788, -0.7895]]
    b = [-0.5429, 6.727]
    return GaveProblem(A, B, b)


def no_solution_problem() -> GaveProblem:
    """2x2 problem with B^-1 b nonnegative and sigma_max(A) < sigma_min(B):
    provably has no solution at all."""
    A = [[-3.0, 2.0], [-5.0, 1.0]]
    B = [[-1.0, 7.0], [8.0, 2.0]]
    b = [1.0, 5.0]
    return GaveProblem(A, B, b)


def matrix_rhs_problem() -> GavmeProblem:
    """Row-dominant 2x2 matrix-unknown problem with the exact solution
    [[3, -2], [-1, -4]]."""
    A = [[2.2, 0.0], [0.0, 2.9]]
    B = [[1.0, 1.0], [1.0, 1.5]]
    F = [[2.6, -10.4], [-7.4, -19.6]]
    return GavmeProblem(A, B, F)


MATRIX_RHS_SOLUTION = np.array([[3.0, -2.0], [-1.0, -4.0]])


def shift_gap_matrix() -> np.ndarray:
    """2x2 matrix with sigma_min just above 1 while sigma_min(A + I) is far
    below 2: separates the two sigma-based AVE conditions."""
    return np.array([[1.4878, -0.1142], [0.3203, -1.1589]])


def flat_ones_ave(b=(-5.0, -4.0)) -> GaveProblem:
    """AVE with the singular all-ones matrix; for b = (-5, -4) it has the
    three solutions (-2,-1), (-4,3), (6,-5)."""
    return ave_view([[1.0, 1.0], [1.0, 1.0]], list(b))


FLAT_ONES_SOLUTIONS = [(-4.0, 3.0), (-2.0, -1.0), (6.0, -5.0)]


def scalar_quarter_ave() -> GaveProblem:
    """1-dimensional AVE 0.25 x - |x| = -5 with the two solutions
    20/3 = 6.66667 and -4."""
    return ave_view([[0.25]], [-5.0])


def tridiag_matrix(n: int) -> np.ndarray:
    """Tridiagonal matrix with diagonal 8 and off-diagonals -1."""
    A = 8.0 * np.eye(n)
    idx = np.arange(n - 1)
    A[idx, idx + 1] = -1.0
    A[idx + 1, idx] = -1.0
    return A
