"""Dense numeric primitives used by every higher layer.

LU solves with explicit singularity detection, singular-value extremes,
symmetric eigendecomposition with signature, the Perron root of nonnegative
matrices by power iteration, and the comparison-matrix / M-matrix tests.

All operations are pure functions of float64 arrays and keep no global
state, so they are safe to call concurrently on shared data.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgWarning, lu_factor, lu_solve, svdvals

from .errors import ConvergenceError, NotSymmetricError, SingularError

# A pivot below this fraction of ||M||_inf marks the matrix as singular.
SINGULAR_PIVOT_FACTOR = 1e-13

# Relative symmetry defect allowed before sym_eigen refuses the input.
SYMMETRY_TOL_FACTOR = 1e-12

# Zero-eigenvalue classification: |lambda| <= TAU_EIG_FACTOR * max(1, max|lambda|).
TAU_EIG_FACTOR = 1e-9

POWER_ITERATION_CAP = 100_000
POWER_ITERATION_TOL = 1e-10


def as_matrix(values) -> np.ndarray:
    """Return values as a read-only 2-D float64 array with finite entries."""
    M = np.array(values, dtype=float, copy=True)
    if M.ndim != 2 or M.size == 0:
        raise ValueError(f"expected a nonempty 2-D matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix entries must be finite")
    M.flags.writeable = False
    return M


def as_square(values) -> np.ndarray:
    M = as_matrix(values)
    if M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    return M


def as_vector(values) -> np.ndarray:
    """Return values as a read-only 1-D float64 array with finite entries."""
    v = np.array(values, dtype=float, copy=True)
    if v.ndim != 1 or v.size == 0:
        raise ValueError(f"expected a nonempty vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite")
    v.flags.writeable = False
    return v


def inf_norm(M: np.ndarray) -> float:
    """Max absolute row sum of a matrix (or max |v_i| of a vector)."""
    M = np.asarray(M, dtype=float)
    if M.ndim == 1:
        return float(np.max(np.abs(M))) if M.size else 0.0
    return float(np.max(np.sum(np.abs(M), axis=1))) if M.size else 0.0


def strictly_less(lhs: float, rhs: float) -> bool:
    """Margin form of the strict inequality lhs < rhs.

    Floating-point equality at the boundary must never count as satisfied,
    so the test is lhs <= rhs - 1e-10 * max(1, |rhs|).
    """
    return lhs <= rhs - 1e-10 * max(1.0, abs(rhs))


def lu_decompose(M) -> tuple[np.ndarray, np.ndarray]:
    """LU-factor a square matrix with partial pivoting.

    Raises SingularError when the smallest pivot magnitude falls below
    SINGULAR_PIVOT_FACTOR * ||M||_inf.
    """
    M = as_square(M)
    norm = inf_norm(M)
    with warnings.catch_warnings():
        # the pivot check below owns singularity reporting
        warnings.simplefilter("ignore", LinAlgWarning)
        lu, piv = lu_factor(M, check_finite=False)
    if float(np.min(np.abs(np.diag(lu)))) <= SINGULAR_PIVOT_FACTOR * norm:
        raise SingularError(
            f"matrix treated as singular: pivot below {SINGULAR_PIVOT_FACTOR:g} * ||M||_inf"
        )
    return lu, piv


def is_singular(M) -> bool:
    """Pivot-based singularity test (same threshold as lu_decompose)."""
    try:
        lu_decompose(M)
    except SingularError:
        return True
    return False


def solve_linear(M, rhs) -> np.ndarray:
    """Solve M x = rhs by LU with partial pivoting.

    Deterministic; raises SingularError when M is singular at the pivot
    threshold.
    """
    M = as_square(M)
    b = as_vector(rhs)
    if b.shape[0] != M.shape[0]:
        raise ValueError(f"rhs length {b.shape[0]} does not match matrix size {M.shape[0]}")
    factors = lu_decompose(M)
    return lu_solve(factors, b, check_finite=False)


def solve_matrix(M, RHS) -> np.ndarray:
    """Solve M X = RHS column-wise with one LU factorization.

    Used wherever a product like M^{-1} RHS is needed without forming the
    inverse explicitly.
    """
    M = as_square(M)
    R = as_matrix(RHS)
    if R.shape[0] != M.shape[0]:
        raise ValueError(f"RHS rows {R.shape[0]} do not match matrix size {M.shape[0]}")
    factors = lu_decompose(M)
    return lu_solve(factors, R, check_finite=False)


def sigma_extremes(M) -> tuple[float, float]:
    """Largest and smallest singular values of a matrix."""
    M = as_matrix(M)
    sv = svdvals(M, check_finite=False)
    return float(sv[0]), float(sv[-1])


@dataclass(frozen=True, eq=False)
class SymEigen:
    """Spectrum of a symmetric matrix.

    eigenvalues are ascending; signature counts (positive, negative, zero)
    eigenvalues, zero meaning |lambda| <= TAU_EIG_FACTOR * max(1, max|lambda|).
    """

    eigenvalues: np.ndarray
    signature: tuple[int, int, int]

    @property
    def n_pos(self) -> int:
        return self.signature[0]

    @property
    def n_neg(self) -> int:
        return self.signature[1]

    @property
    def n_zero(self) -> int:
        return self.signature[2]

    def is_positive_definite(self) -> bool:
        return self.n_pos == len(self.eigenvalues)

    def is_positive_semidefinite(self) -> bool:
        return self.n_neg == 0


def eig_zero_tolerance(eigenvalues: np.ndarray) -> float:
    scale = float(np.max(np.abs(eigenvalues))) if eigenvalues.size else 0.0
    return TAU_EIG_FACTOR * max(1.0, scale)


def sym_eigen(M) -> SymEigen:
    """Eigendecomposition of a symmetric matrix with signature counts.

    The input must satisfy ||M - M^T||_inf <= 1e-12 * ||M||_inf; it is then
    symmetrized as (M + M^T)/2 before the decomposition.
    """
    M = as_square(M)
    defect = inf_norm(M - M.T)
    if defect > SYMMETRY_TOL_FACTOR * inf_norm(M):
        raise NotSymmetricError(
            f"matrix is not symmetric: ||M - M^T||_inf = {defect:g} exceeds tolerance"
        )
    w = np.linalg.eigvalsh(0.5 * (M + M.T))
    tau = eig_zero_tolerance(w)
    n_zero = int(np.count_nonzero(np.abs(w) <= tau))
    n_pos = int(np.count_nonzero(w > tau))
    n_neg = int(np.count_nonzero(w < -tau))
    w.flags.writeable = False
    return SymEigen(w, (n_pos, n_neg, n_zero))


def nonneg_spectral_radius(M) -> float:
    """Perron root of an entrywise-nonnegative square matrix.

    Power iteration from the all-ones vector; converged when successive
    Rayleigh estimates differ by less than POWER_ITERATION_TOL relative.
    Raises ConvergenceError at the iteration cap (e.g. for tied dominant
    eigenvalues of periodic matrices) so callers can degrade to an
    inconclusive verdict instead of trusting a wrong value.  On clustered
    dominant eigenvalues the returned value can be slightly stale
    (~1e-6 relative) since progress per step shrinks with the gap.
    """
    M = as_square(M)
    if np.any(M < 0.0):
        raise ValueError("nonneg_spectral_radius requires entrywise-nonnegative input")
    n = M.shape[0]
    x = np.ones(n) / np.sqrt(n)
    mu_prev = None
    for _ in range(POWER_ITERATION_CAP):
        y = M @ x
        norm_y = float(np.linalg.norm(y))
        if norm_y == 0.0:
            # the all-ones orbit died: a nonnegative matrix with M^k 1 = 0
            # is nilpotent, so the Perron root is exactly 0
            return 0.0
        mu = float(x @ y)
        x = y / norm_y
        if mu_prev is not None and abs(mu - mu_prev) <= POWER_ITERATION_TOL * abs(mu):
            return mu
        mu_prev = mu
    raise ConvergenceError(
        f"power iteration did not converge within {POWER_ITERATION_CAP} iterations"
    )


def comparison_matrix(M) -> np.ndarray:
    """Comparison matrix: |m_ii| on the diagonal, -|m_ij| off it."""
    M = as_square(M)
    C = -np.abs(M)
    np.fill_diagonal(C, np.abs(np.diag(M)))
    return C


@dataclass(frozen=True)
class MMatrixResult:
    """Outcome of the nonsingular M-matrix test with its certificate."""

    holds: bool
    gamma: float
    rho: float
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds


def is_nonsingular_m_matrix(M) -> MMatrixResult:
    """Test whether M is a nonsingular M-matrix.

    True iff M is a Z-matrix (off-diagonal entries <= 0 within
    1e-12 * ||M||_inf) and, writing M = gamma*I - Delta with gamma the
    largest diagonal entry, rho(Delta) < gamma - 1e-10 * max(1, gamma).
    May raise ConvergenceError from the Perron-root iteration.
    """
    M = as_square(M)
    n = M.shape[0]
    gamma = float(np.max(np.diag(M)))
    off = M - np.diag(np.diag(M))
    if float(np.max(off)) > SYMMETRY_TOL_FACTOR * inf_norm(M):
        return MMatrixResult(False, gamma, float("nan"), "positive off-diagonal entry")
    delta = gamma * np.eye(n) - M
    # off-diagonal entries within the Z tolerance can leave tiny negatives
    delta = np.maximum(delta, 0.0)
    rho = nonneg_spectral_radius(delta)
    tau_strict = 1e-10 * max(1.0, gamma)
    if rho < gamma - tau_strict:
        return MMatrixResult(True, gamma, rho)
    return MMatrixResult(False, gamma, rho, "spectral radius reaches the diagonal shift")
