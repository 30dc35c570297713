"""Exact, exponential-cost ground truth for small dimensions.

Exhaustive solution enumeration over sign orthants, interval-matrix
regularity by vertex determinants, symmetric-interval positive
definiteness, and a best-effort search for contraction witnesses.
Dimension caps keep worst-case desk runtime bounded; callers can raise
them explicitly.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import CapExceededError, SingularError
from .model import GaveProblem, SolutionSet
from .numkernel import as_square, solve_linear, sym_eigen

ENUM_CAP = 12
REGULARITY_CAP = 8
PD_CAP = 12

# determinants below 1e-12 * (Hadamard row bound) count as zero
DET_ZERO_FACTOR = 1e-12

SEED_ENV_VAR = "GAVEKIT_SEED"
DEFAULT_SEED = 42

SIGN_CONSISTENCY_TOL = 1e-10
DEDUP_TOL = 1e-8


def sign_patterns(n: int) -> np.ndarray:
    """All 2^n sign vectors, ordered by binary encoding (bit i=0 -> +1)."""
    k = np.arange(2**n)
    bits = (k[:, None] >> np.arange(n)[None, :]) & 1
    return 1.0 - 2.0 * bits


def enumerate_solutions(p: GaveProblem, cap: int = ENUM_CAP) -> SolutionSet:
    """Find every solution of A x - B |x| = b by orthant enumeration.

    For each sign pattern D the linear system (A - B D) x = b is solved and
    x accepted iff D_ii x_i >= -1e-10 (1 + ||x||_inf) for all i, so zeros
    may live in any orthant.  Accepted solutions are deduplicated at
    inf-distance 1e-8; sign patterns with a singular system are counted in
    degenerate_orthants rather than enumerated (a continuum may hide there).
    """
    n = p.n
    if n > cap:
        raise CapExceededError(f"dimension {n} exceeds the enumeration cap {cap}")
    solutions: list[np.ndarray] = []
    degenerate = 0
    for d in sign_patterns(n):
        M = p.A - p.B * d  # A - B @ diag(d)
        try:
            x = solve_linear(M, p.b)
        except SingularError:
            degenerate += 1
            continue
        slack = SIGN_CONSISTENCY_TOL * (1.0 + float(np.max(np.abs(x))))
        if np.all(d * x >= -slack):
            if all(float(np.max(np.abs(x - s))) > DEDUP_TOL for s in solutions):
                solutions.append(x)
    return SolutionSet(tuple(solutions), degenerate, cap)


def _vertex_det_signs(C: np.ndarray, delta: np.ndarray, d1: np.ndarray) -> np.ndarray:
    """Determinant signs of C - diag(d1) @ delta @ diag(d2) over all d2.

    Returns +1/-1 per vertex, 0 where |det| falls below the zero threshold.
    """
    n = C.shape[0]
    d2s = sign_patterns(n)
    scaled = d1[:, None] * delta
    stack = C[None, :, :] - scaled[None, :, :] * d2s[:, None, :]
    sign, logabs = np.linalg.slogdet(stack)
    # Hadamard bound on |det| gives the natural scale per vertex
    row_norms = np.linalg.norm(stack, axis=2)
    with np.errstate(divide="ignore"):
        log_scale = np.sum(np.log(np.maximum(row_norms, 1e-300)), axis=1)
    near_zero = (sign == 0) | (logabs < np.log(DET_ZERO_FACTOR) + log_scale)
    out = np.where(near_zero, 0.0, sign)
    return out


def interval_regularity(C, Delta, cap: int = REGULARITY_CAP) -> bool:
    """Whether every matrix between C - Delta and C + Delta is invertible.

    Finite test: the determinants of the vertex matrices
    C - diag(d1) Delta diag(d2) over all sign vectors (2^(2n-1) after
    fixing the first entry of d1, since flipping both global signs repeats
    the same matrix) must be nonzero with a single common sign.  Near-zero
    determinants are reported as singular.
    """
    C = as_square(C)
    Delta = as_square(Delta)
    if Delta.shape != C.shape:
        raise ValueError("C and Delta must have the same shape")
    if np.any(Delta < 0.0):
        raise ValueError("Delta must be entrywise nonnegative")
    n = C.shape[0]
    if n > cap:
        raise CapExceededError(f"dimension {n} exceeds the regularity cap {cap}")
    reference = 0.0
    for d1_tail in sign_patterns(n - 1):
        full_d1 = np.concatenate(([1.0], d1_tail))
        signs = _vertex_det_signs(C, Delta, full_d1)
        if np.any(signs == 0.0):
            return False
        if reference == 0.0:
            reference = signs[0]
        if np.any(signs != reference):
            return False
    return True


def symmetric_interval_pd(A, B, cap: int = PD_CAP) -> bool:
    """Whether every symmetric matrix between A - B and A + B is positive
    definite.

    Vertex test: A - diag(d) B diag(d) must be positive definite for all
    2^(n-1) sign vectors d with the first entry fixed (a global sign flip
    leaves the vertex unchanged).
    """
    A = as_square(A)
    B = as_square(B)
    if B.shape != A.shape:
        raise ValueError("A and B must have the same shape")
    if np.any(B < 0.0):
        raise ValueError("B must be entrywise nonnegative")
    n = A.shape[0]
    if n > cap:
        raise CapExceededError(f"dimension {n} exceeds the positive-definiteness cap {cap}")
    for d_tail in sign_patterns(n - 1):
        d = np.concatenate(([1.0], d_tail))
        vertex = A - (d[:, None] * B) * d[None, :]
        if not sym_eigen(vertex).is_positive_definite():
            return False
    return True


def contraction_violation(A: np.ndarray, x: np.ndarray) -> float:
    """max_i (|Ax|_i - |x|_i): nonpositive means |Ax| <= |x| entrywise."""
    return float(np.max(np.abs(A @ x) - np.abs(x)))


def search_contraction_witness(A, budget: int = 10_000, seed: int | None = None):
    """Best-effort search for a nontrivial x with |Ax| <= |x| entrywise.

    Samples unit vectors from a seeded generator (GAVEKIT_SEED, default 42)
    and refines each by coordinate descent on max_i(|Ax|_i - |x|_i).
    Returns x with ||x||_inf = 1 and |Ax| <= |x| + 1e-10 entrywise, or None
    when the budget runs out.  None is not a proof that no witness exists.
    """
    A = as_square(A)
    n = A.shape[0]
    if seed is None:
        seed = int(os.environ.get(SEED_ENV_VAR, DEFAULT_SEED))
    rng = np.random.default_rng(seed)
    candidates = np.linspace(-1.0, 1.0, 21)
    evaluations = 0
    while evaluations < budget:
        x = rng.standard_normal(n)
        scale = float(np.max(np.abs(x)))
        if scale == 0.0:
            continue
        x /= scale
        best = contraction_violation(A, x)
        evaluations += 1
        improved = True
        while improved and evaluations < budget:
            improved = False
            for i in range(n):
                saved = x[i]
                for c in candidates:
                    x[i] = c
                    m = float(np.max(np.abs(x)))
                    if m == 0.0:
                        continue
                    v = contraction_violation(A, x / m)
                    evaluations += 1
                    if v < best - 1e-15:
                        best = v
                        saved = c
                        improved = True
                x[i] = saved
            m = float(np.max(np.abs(x)))
            x /= m
            best = contraction_violation(A, x)
        if best <= 1e-10:
            return x
    return None
