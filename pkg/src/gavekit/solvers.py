"""Iterative solution methods and the matrix-unknown column driver.

Picard iteration converges in the contraction regime ||A^{-1}B|| < 1; the
generalized Newton iteration relinearizes on the sign pattern of the
current iterate and is a local heuristic with cycle detection as the
safety net.  Neither carries a global convergence claim.
"""

from __future__ import annotations

import numpy as np
from scipy.linalg import lu_solve

from .errors import (
    CapExceededError,
    GavmeColumnError,
    NoConvergenceError,
    SingularError,
)
from .model import GaveProblem, GavmeProblem, residual
from .numkernel import inf_norm, lu_decompose, solve_linear
from .oracle import enumerate_solutions

PICARD_DEFAULT_TOL = 1e-10
PICARD_DEFAULT_MAXIT = 10_000
NEWTON_DEFAULT_TOL = 1e-10
NEWTON_DEFAULT_MAXIT = 100


def picard_solve(p: GaveProblem, tol: float = PICARD_DEFAULT_TOL,
                 maxit: int = PICARD_DEFAULT_MAXIT) -> np.ndarray:
    """Fixed-point iteration x <- A^{-1}(B |x| + b) from x0 = A^{-1} b.

    One LU factorization of A is reused throughout.  Returns the first
    iterate whose residual is at most tol * (1 + ||b||_inf); raises
    NoConvergenceError (carrying the last iterate and residual) at maxit.
    """
    factors = lu_decompose(p.A)
    threshold = tol * (1.0 + inf_norm(p.b))
    x = lu_solve(factors, p.b, check_finite=False)
    for _ in range(maxit):
        r = residual(p, x)
        if r <= threshold:
            return x
        x = lu_solve(factors, p.B @ np.abs(x) + p.b, check_finite=False)
        if not np.all(np.isfinite(x)):
            raise NoConvergenceError("fixed-point iteration diverged", x, float("inf"))
    r = residual(p, x)
    if r <= threshold:
        return x
    raise NoConvergenceError(
        f"fixed-point iteration did not reach tolerance within {maxit} iterations",
        x, r,
    )


def newton_solve(p: GaveProblem, tol: float = NEWTON_DEFAULT_TOL,
                 maxit: int = NEWTON_DEFAULT_MAXIT) -> np.ndarray:
    """Generalized Newton iteration: solve (A - B diag(sign(x_k))) x = b.

    Starts from A^{-1} b when A is invertible, else from b.  sign(0) = 0,
    so the linearization at an iterate with zero components may differ
    from both adjacent orthants; cycles of length 2 (and stalls) are
    detected and reported as NoConvergenceError.  A singular linearized
    system raises SingularError.
    """
    try:
        x = solve_linear(p.A, p.b)
    except SingularError:
        x = np.array(p.b, dtype=float, copy=True)
    threshold = tol * (1.0 + inf_norm(p.b))
    previous = None
    for _ in range(maxit):
        r = residual(p, x)
        if r <= threshold:
            return x
        M = p.A - p.B * np.sign(x)
        x_next = solve_linear(M, p.b)
        close_tol = 1e-14 * (1.0 + float(np.max(np.abs(x_next))))
        stalled = float(np.max(np.abs(x_next - x))) <= close_tol
        cycling = previous is not None and float(np.max(np.abs(x_next - previous))) <= close_tol
        if (stalled or cycling) and residual(p, x_next) > threshold:
            raise NoConvergenceError(
                "generalized Newton iteration cycles without solving",
                x_next, residual(p, x_next),
            )
        previous = x
        x = x_next
    r = residual(p, x)
    if r <= threshold:
        return x
    raise NoConvergenceError(
        f"generalized Newton did not reach tolerance within {maxit} iterations", x, r
    )


def gavme_solve(p: GavmeProblem, method: str = "picard", **options) -> np.ndarray:
    """Solve A X - B |X| = F column by column.

    method is one of "picard", "newton", "enumerate"; options are passed to
    the underlying column solver.  Any column failure raises
    GavmeColumnError naming the column.
    """
    if method not in ("picard", "newton", "enumerate"):
        raise ValueError(f"unknown method {method!r}")
    columns = []
    for k in range(p.m):
        sub = p.column(k)
        try:
            if method == "picard":
                columns.append(picard_solve(sub, **options))
            elif method == "newton":
                columns.append(newton_solve(sub, **options))
            else:
                found = enumerate_solutions(sub, **options)
                if len(found) != 1:
                    raise NoConvergenceError(
                        f"enumeration found {len(found)} solutions, expected exactly 1"
                    )
                columns.append(found.solutions[0])
        except (NoConvergenceError, SingularError, CapExceededError) as exc:
            raise GavmeColumnError(k, exc) from exc
    return np.column_stack(columns)
