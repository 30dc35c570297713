"""One checker per solvability/unsolvability condition.

Every checker computes its numeric certificate and returns a Verdict.
Sufficient conditions that fail yield NotEstablished, which says nothing
about the problem; numeric trouble (singular solves, stalled iterations,
exceeded caps) degrades to Inconclusive, never to a wrong verdict.  Three
resolvent/hermitian conditions are retained although refuted by explicit
counterexamples: they are permanently barred from Proved and tagged
KnownUnsound, reporting only whether their (untrustworthy) inequality holds.
"""

from __future__ import annotations

import numpy as np

from . import oracle
from .errors import CapExceededError, ConvergenceError, NotSymmetricError, SingularError
from .model import (
    INCONCLUSIVE,
    KNOWN_UNSOUND,
    NO_SOLUTION_FOR_GIVEN_B,
    NOT_ESTABLISHED,
    NOT_UNIQUE_FOR_ALL_B,
    PROVED,
    SOUND,
    UNIQUE_FOR_ALL_B,
    ConditionReport,
    GaveProblem,
    Verdict,
    summarize,
)
from .numkernel import (
    comparison_matrix,
    inf_norm,
    is_nonsingular_m_matrix,
    is_singular,
    nonneg_spectral_radius,
    sigma_extremes,
    solve_linear,
    solve_matrix,
    strictly_less,
    sym_eigen,
)

# checker identifiers, in report order
ROW_DOM = "ROW_DOM"
NORM_INF_BOUND = "NORM_INF_BOUND"
NORM_2 = "NORM_2"
SV_ABS = "SV_ABS"
SV_PLAIN = "SV_PLAIN"
PD_SHIFT = "PD_SHIFT"
PD_SHIFT_ABS = "PD_SHIFT_ABS"
SIGMA_AINVB = "SIGMA_AINVB"
RHO_ABS_AINVB = "RHO_ABS_AINVB"
M_MATRIX = "M_MATRIX"
H_MATRIX = "H_MATRIX"
SYM_PD = "SYM_PD"
UNSOLV_DIRECT = "UNSOLV_DIRECT"
UNSOLV_AINVB = "UNSOLV_AINVB"
UNSOLV_BINVA = "UNSOLV_BINVA"
AVE_SIGMA = "AVE_SIGMA"
AVE_SIGMA_SHIFT = "AVE_SIGMA_SHIFT"
AVE_SIGNATURE = "AVE_SIGNATURE"
AVE_RESOLVENT_MINUS = "AVE_RESOLVENT_MINUS"
AVE_RESOLVENT_PLUS = "AVE_RESOLVENT_PLUS"
AVE_HERMITIAN = "AVE_HERMITIAN"
NONUNIQ_SIGMA = "NONUNIQ_SIGMA"
NONUNIQ_PSD = "NONUNIQ_PSD"
NONUNIQ_EIG01 = "NONUNIQ_EIG01"
NONUNIQ_SINGULAR_INTERVAL = "NONUNIQ_SINGULAR_INTERVAL"

CHECKER_ORDER = (
    ROW_DOM,
    NORM_INF_BOUND,
    NORM_2,
    SV_ABS,
    SV_PLAIN,
    PD_SHIFT,
    PD_SHIFT_ABS,
    SIGMA_AINVB,
    RHO_ABS_AINVB,
    M_MATRIX,
    H_MATRIX,
    SYM_PD,
    UNSOLV_DIRECT,
    UNSOLV_AINVB,
    UNSOLV_BINVA,
    AVE_SIGMA,
    AVE_SIGMA_SHIFT,
    AVE_SIGNATURE,
    AVE_RESOLVENT_MINUS,
    AVE_RESOLVENT_PLUS,
    AVE_HERMITIAN,
    NONUNIQ_SIGMA,
    NONUNIQ_PSD,
    NONUNIQ_EIG01,
    NONUNIQ_SINGULAR_INTERVAL,
)

UNSOUND_CHECKERS = frozenset({AVE_RESOLVENT_MINUS, AVE_RESOLVENT_PLUS, AVE_HERMITIAN})

# entrywise nonnegativity tests allow this much below zero
ENTRYWISE_NONNEG_TOL = -1e-12

# B counts as the identity when ||B - I||_max is at most this
AVE_B_TOL = 1e-14

DEFAULT_PD_CAP = 12
DEFAULT_REGULARITY_CAP = 8
DEFAULT_WITNESS_BUDGET = 10_000


def soundness_of(condition_id: str) -> str:
    return KNOWN_UNSOUND if condition_id in UNSOUND_CHECKERS else SOUND


def _verdict(cid, claim, status, certificate, reason=""):
    return Verdict(cid, claim, status, soundness_of(cid), dict(certificate), reason)


def _entrywise_nonneg(M) -> bool:
    return bool(np.all(M >= ENTRYWISE_NONNEG_TOL))


def _is_symmetric(M) -> bool:
    return inf_norm(M - M.T) <= 1e-12 * inf_norm(M)


def _check_pair(A, B):
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"A must be square, got shape {A.shape}")
    if B.shape != A.shape:
        raise ValueError(f"B must match A's shape {A.shape}, got {B.shape}")
    return A, B


def check_row_dominance(A, B) -> Verdict:
    """Row dominance: |a_ii| > sum_j |b_ij| + sum_{j!=i} |a_ij| for every row."""
    A, B = _check_pair(A, B)
    abs_a = np.abs(A)
    diag = np.diag(abs_a)
    off_a = np.sum(abs_a, axis=1) - diag
    row_b = np.sum(np.abs(B), axis=1)
    slack = diag - (row_b + off_a)
    cert = {"min_row_slack": float(np.min(slack))}
    if A.shape[0] <= 8:
        cert.update({f"row_slack_{i}": float(s) for i, s in enumerate(slack)})
    holds = all(strictly_less(row_b[i] + off_a[i], diag[i]) for i in range(A.shape[0]))
    status = PROVED if holds else NOT_ESTABLISHED
    return _verdict(ROW_DOM, UNIQUE_FOR_ALL_B, status, cert)


def check_norm_bound(A, B, variant: str = NORM_2) -> Verdict:
    """Contraction via a norm of A^{-1}B.

    NORM_INF_BOUND bounds ||A^{-1}B||_inf for strictly diagonally dominant A
    by max_i (sum_j |b_ij|) / (|a_ii| - sum_{j!=i} |a_ij|); NORM_2 computes
    sigma_max(A^{-1}B) by solving rather than inverting.
    """
    A, B = _check_pair(A, B)
    if variant == NORM_INF_BOUND:
        abs_a = np.abs(A)
        diag = np.diag(abs_a)
        off_a = np.sum(abs_a, axis=1) - diag
        if not all(strictly_less(off_a[i], diag[i]) for i in range(A.shape[0])):
            return _verdict(
                NORM_INF_BOUND,
                UNIQUE_FOR_ALL_B,
                NOT_ESTABLISHED,
                {"sdd": 0.0},
                "A is not strictly diagonally dominant, the row bound does not apply",
            )
        bound = float(np.max(np.sum(np.abs(B), axis=1) / (diag - off_a)))
        cert = {"sdd": 1.0, "inf_norm_bound": bound}
        status = PROVED if strictly_less(bound, 1.0) else NOT_ESTABLISHED
        return _verdict(NORM_INF_BOUND, UNIQUE_FOR_ALL_B, status, cert)
    if variant == NORM_2:
        try:
            M = solve_matrix(A, B)
        except SingularError:
            return _verdict(
                NORM_2, UNIQUE_FOR_ALL_B, INCONCLUSIVE, {}, "A is singular"
            )
        sigma, _ = sigma_extremes(M)
        status = PROVED if strictly_less(sigma, 1.0) else NOT_ESTABLISHED
        return _verdict(NORM_2, UNIQUE_FOR_ALL_B, status, {"sigma_max_ainv_b": sigma})
    raise ValueError(f"unknown norm-bound variant {variant!r}")


def check_singular_values(A, B, variant: str) -> Verdict:
    """Singular-value separation of A and B, in four flavors.

    SV_ABS: sigma_max(|B|) < sigma_min(A); SV_PLAIN: sigma_max(B) <
    sigma_min(A); PD_SHIFT / PD_SHIFT_ABS: A^T A - s^2 I positive definite
    with s the 2-norm of B or of |B|.
    """
    A, B = _check_pair(A, B)
    _, sigma_min_a = sigma_extremes(A)
    sigma_max_b, _ = sigma_extremes(B)
    sigma_max_abs_b, _ = sigma_extremes(np.abs(B))
    if variant == SV_ABS:
        status = PROVED if strictly_less(sigma_max_abs_b, sigma_min_a) else NOT_ESTABLISHED
        cert = {"sigma_max_abs_b": sigma_max_abs_b, "sigma_min_a": sigma_min_a}
        return _verdict(SV_ABS, UNIQUE_FOR_ALL_B, status, cert)
    if variant == SV_PLAIN:
        status = PROVED if strictly_less(sigma_max_b, sigma_min_a) else NOT_ESTABLISHED
        cert = {"sigma_max_b": sigma_max_b, "sigma_min_a": sigma_min_a}
        return _verdict(SV_PLAIN, UNIQUE_FOR_ALL_B, status, cert)
    if variant in (PD_SHIFT, PD_SHIFT_ABS):
        shift = sigma_max_b if variant == PD_SHIFT else sigma_max_abs_b
        S = A.T @ A - shift**2 * np.eye(A.shape[0])
        eig = sym_eigen(S)
        status = PROVED if eig.is_positive_definite() else NOT_ESTABLISHED
        cert = {
            "min_eigenvalue": float(eig.eigenvalues[0]),
            "norm_shift": shift,
        }
        return _verdict(variant, UNIQUE_FOR_ALL_B, status, cert)
    raise ValueError(f"unknown singular-value variant {variant!r}")


def check_spectral(A, B, variant: str) -> Verdict:
    """Spectral contraction of A^{-1}B.

    SIGMA_AINVB: sigma_max(A^{-1}B) < 1; RHO_ABS_AINVB: the Perron root of
    |A^{-1}B| is below 1.
    """
    A, B = _check_pair(A, B)
    if variant not in (SIGMA_AINVB, RHO_ABS_AINVB):
        raise ValueError(f"unknown spectral variant {variant!r}")
    try:
        M = solve_matrix(A, B)
    except SingularError:
        return _verdict(variant, UNIQUE_FOR_ALL_B, INCONCLUSIVE, {}, "A is singular")
    if variant == SIGMA_AINVB:
        sigma, _ = sigma_extremes(M)
        status = PROVED if strictly_less(sigma, 1.0) else NOT_ESTABLISHED
        return _verdict(SIGMA_AINVB, UNIQUE_FOR_ALL_B, status, {"sigma_max_ainv_b": sigma})
    try:
        rho = nonneg_spectral_radius(np.abs(M))
    except ConvergenceError:
        return _verdict(
            RHO_ABS_AINVB,
            UNIQUE_FOR_ALL_B,
            INCONCLUSIVE,
            {},
            "Perron-root iteration did not converge",
        )
    status = PROVED if strictly_less(rho, 1.0) else NOT_ESTABLISHED
    return _verdict(RHO_ABS_AINVB, UNIQUE_FOR_ALL_B, status, {"rho_abs_ainv_b": rho})


def check_m_or_h_matrix(A, B, variant: str) -> Verdict:
    """M-matrix / H-matrix structure of A - B with nonnegative B.

    M_MATRIX: B >= 0 and A - B a nonsingular M-matrix.  H_MATRIX: B >= 0,
    A - B with positive diagonal and a comparison matrix that is a
    nonsingular M-matrix.
    """
    A, B = _check_pair(A, B)
    if variant not in (M_MATRIX, H_MATRIX):
        raise ValueError(f"unknown matrix-class variant {variant!r}")
    cert = {"min_b_entry": float(np.min(B))}
    if not _entrywise_nonneg(B):
        return _verdict(
            variant, UNIQUE_FOR_ALL_B, NOT_ESTABLISHED, cert, "B has a negative entry"
        )
    difference = A - B
    if variant == M_MATRIX:
        target = difference
    else:
        diag = np.diag(difference)
        cert["min_diag_a_minus_b"] = float(np.min(diag))
        if not all(strictly_less(0.0, d) for d in diag):
            return _verdict(
                H_MATRIX,
                UNIQUE_FOR_ALL_B,
                NOT_ESTABLISHED,
                cert,
                "A - B has a nonpositive diagonal entry",
            )
        target = comparison_matrix(difference)
    try:
        result = is_nonsingular_m_matrix(target)
    except ConvergenceError:
        return _verdict(
            variant, UNIQUE_FOR_ALL_B, INCONCLUSIVE, cert,
            "Perron-root iteration did not converge",
        )
    cert["gamma"] = result.gamma
    if np.isfinite(result.rho):
        cert["rho_delta"] = result.rho
    status = PROVED if result.holds else NOT_ESTABLISHED
    return _verdict(variant, UNIQUE_FOR_ALL_B, status, cert, result.reason)


def check_symmetric_pd(A, B, cap: int = DEFAULT_PD_CAP) -> Verdict:
    """Vertex positive definiteness of the symmetric band [A - B, A + B].

    Requires symmetric positive definite A and symmetric entrywise
    nonnegative B; proved when A - D B D is positive definite for every
    diagonal sign matrix D (checked up to the global sign flip).
    """
    A, B = _check_pair(A, B)
    if not _is_symmetric(A):
        return _verdict(SYM_PD, UNIQUE_FOR_ALL_B, INCONCLUSIVE, {}, "A is not symmetric")
    if not _is_symmetric(B):
        return _verdict(SYM_PD, UNIQUE_FOR_ALL_B, INCONCLUSIVE, {}, "B is not symmetric")
    if not _entrywise_nonneg(B):
        return _verdict(
            SYM_PD, UNIQUE_FOR_ALL_B, INCONCLUSIVE, {}, "B has a negative entry"
        )
    eig_a = sym_eigen(A)
    cert = {"min_eigenvalue_a": float(eig_a.eigenvalues[0])}
    if not eig_a.is_positive_definite():
        return _verdict(
            SYM_PD, UNIQUE_FOR_ALL_B, INCONCLUSIVE, cert, "A is not positive definite"
        )
    try:
        pd = oracle.symmetric_interval_pd(A, np.maximum(B, 0.0), cap=cap)
    except CapExceededError as exc:
        return _verdict(SYM_PD, UNIQUE_FOR_ALL_B, INCONCLUSIVE, cert, str(exc))
    cert["interval_pd"] = 1.0 if pd else 0.0
    status = PROVED if pd else NOT_ESTABLISHED
    return _verdict(SYM_PD, UNIQUE_FOR_ALL_B, status, cert)


def check_unsolvable(p: GaveProblem, variant: str) -> Verdict:
    """No-solution certificates for the given right-hand side.

    All variants require B^{-1} b entrywise nonnegative and nonzero, then
    decide by UNSOLV_DIRECT: sigma_max(A) < sigma_min(B); UNSOLV_AINVB:
    sigma_min(A^{-1}B) > 1; UNSOLV_BINVA: sigma_max(B^{-1}A) < 1.
    """
    if variant not in (UNSOLV_DIRECT, UNSOLV_AINVB, UNSOLV_BINVA):
        raise ValueError(f"unknown unsolvability variant {variant!r}")
    try:
        binv_b = solve_linear(p.B, p.b)
    except SingularError:
        return _verdict(
            variant, NO_SOLUTION_FOR_GIVEN_B, INCONCLUSIVE, {}, "B is singular"
        )
    cert = {"min_binv_b": float(np.min(binv_b))}
    nonneg = bool(np.all(binv_b >= ENTRYWISE_NONNEG_TOL))
    nonzero = float(np.max(np.abs(binv_b))) > 1e-12
    if not (nonneg and nonzero):
        reason = "B^-1 b is not a nonzero nonnegative vector"
        return _verdict(variant, NO_SOLUTION_FOR_GIVEN_B, NOT_ESTABLISHED, cert, reason)
    if variant == UNSOLV_DIRECT:
        sigma_max_a, _ = sigma_extremes(p.A)
        _, sigma_min_b = sigma_extremes(p.B)
        cert.update({"sigma_max_a": sigma_max_a, "sigma_min_b": sigma_min_b})
        holds = strictly_less(sigma_max_a, sigma_min_b)
    elif variant == UNSOLV_AINVB:
        try:
            M = solve_matrix(p.A, p.B)
        except SingularError:
            return _verdict(
                variant, NO_SOLUTION_FOR_GIVEN_B, INCONCLUSIVE, cert, "A is singular"
            )
        _, sigma_min = sigma_extremes(M)
        cert["sigma_min_ainv_b"] = sigma_min
        holds = strictly_less(1.0, sigma_min)
    else:
        M = solve_matrix(p.B, p.A)  # B nonsingular, checked above
        sigma_max, _ = sigma_extremes(M)
        cert["sigma_max_binv_a"] = sigma_max
        holds = strictly_less(sigma_max, 1.0)
    status = PROVED if holds else NOT_ESTABLISHED
    return _verdict(variant, NO_SOLUTION_FOR_GIVEN_B, status, cert)


def check_ave(A, variant: str) -> Verdict:
    """Conditions specific to A x - |x| = b.

    AVE_SIGMA: sigma_min(A) > 1; AVE_SIGMA_SHIFT: sigma_min(A + I) > 2.
    AVE_SIGNATURE (symmetric A only) compares the signatures of A - I and
    A + I; equality is necessary and sufficient, so differing signatures
    prove non-uniqueness rather than merely failing.
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    if variant == AVE_SIGMA:
        _, sigma_min = sigma_extremes(A)
        status = PROVED if strictly_less(1.0, sigma_min) else NOT_ESTABLISHED
        return _verdict(AVE_SIGMA, UNIQUE_FOR_ALL_B, status, {"sigma_min_a": sigma_min})
    if variant == AVE_SIGMA_SHIFT:
        _, sigma_min = sigma_extremes(A + np.eye(n))
        status = PROVED if strictly_less(2.0, sigma_min) else NOT_ESTABLISHED
        return _verdict(
            AVE_SIGMA_SHIFT, UNIQUE_FOR_ALL_B, status, {"sigma_min_a_plus_i": sigma_min}
        )
    if variant == AVE_SIGNATURE:
        eig_minus = sym_eigen(A - np.eye(n))  # raises NotSymmetricError
        eig_plus = sym_eigen(A + np.eye(n))
        match = eig_minus.signature == eig_plus.signature
        cert = {
            "pos_minus": float(eig_minus.n_pos),
            "neg_minus": float(eig_minus.n_neg),
            "zero_minus": float(eig_minus.n_zero),
            "pos_plus": float(eig_plus.n_pos),
            "neg_plus": float(eig_plus.n_neg),
            "zero_plus": float(eig_plus.n_zero),
            "signatures_match": 1.0 if match else 0.0,
        }
        if match:
            return _verdict(AVE_SIGNATURE, UNIQUE_FOR_ALL_B, PROVED, cert)
        # the equivalence is two-sided for symmetric A
        return _verdict(AVE_SIGNATURE, NOT_UNIQUE_FOR_ALL_B, PROVED, cert)
    raise ValueError(f"unknown AVE variant {variant!r}")


def check_ave_unsound(A, variant: str) -> Verdict:
    """Published conditions refuted by counterexamples; never Proved.

    AVE_RESOLVENT_MINUS / _PLUS test ||(A -/+ I)^{-1}||_2 < 2; AVE_HERMITIAN
    tests invertibility of H - I for the hermitian part H of a positive
    definite A.  When the inequality holds the verdict is still
    NotEstablished, with certificate flag unsound_condition_holds = 1.
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    if variant in (AVE_RESOLVENT_MINUS, AVE_RESOLVENT_PLUS):
        sign = -1.0 if variant == AVE_RESOLVENT_MINUS else 1.0
        shifted = A + sign * np.eye(n)
        sigma_max, sigma_min = sigma_extremes(shifted)
        if sigma_min <= 1e-13 * max(1.0, sigma_max):
            return _verdict(
                variant, UNIQUE_FOR_ALL_B, INCONCLUSIVE, {},
                "the shifted matrix is singular, no resolvent exists",
            )
        norm = 1.0 / sigma_min
        holds = strictly_less(norm, 2.0)
        cert = {"resolvent_norm": norm, "unsound_condition_holds": 1.0 if holds else 0.0}
        reason = "condition holds but is refuted by counterexamples" if holds else ""
        return _verdict(variant, UNIQUE_FOR_ALL_B, NOT_ESTABLISHED, cert, reason)
    if variant == AVE_HERMITIAN:
        H = 0.5 * (A + A.T)
        eig = sym_eigen(H)
        if not eig.is_positive_definite():
            return _verdict(
                AVE_HERMITIAN, UNIQUE_FOR_ALL_B, INCONCLUSIVE,
                {"min_eigenvalue_h": float(eig.eigenvalues[0])},
                "A is not positive definite",
            )
        sigma_max, sigma_min = sigma_extremes(H - np.eye(n))
        invertible = sigma_min > 1e-13 * max(1.0, sigma_max)
        cert = {
            "sigma_min_h_minus_i": sigma_min,
            "unsound_condition_holds": 1.0 if invertible else 0.0,
        }
        reason = "condition holds but is refuted by counterexamples" if invertible else ""
        return _verdict(AVE_HERMITIAN, UNIQUE_FOR_ALL_B, NOT_ESTABLISHED, cert, reason)
    raise ValueError(f"unknown unsound-AVE variant {variant!r}")


def check_ave_nonunique(
    A,
    variant: str,
    cap: int = DEFAULT_REGULARITY_CAP,
    witness_budget: int = DEFAULT_WITNESS_BUDGET,
) -> Verdict:
    """Non-uniqueness certificates for A x - |x| = b.

    NONUNIQ_SIGMA: sigma_max(A) <= 1; NONUNIQ_PSD: I - A^T A positive
    semidefinite; NONUNIQ_EIG01: A or A - I singular (pivot test, no
    eigensolve); NONUNIQ_SINGULAR_INTERVAL: the band [A - I, A + I]
    contains a singular matrix (vertex oracle up to the cap, above it a
    found contraction witness still proves the claim, otherwise the
    verdict stays Inconclusive).
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    if variant == NONUNIQ_SIGMA:
        sigma_max, _ = sigma_extremes(A)
        holds = sigma_max <= 1.0 + 1e-12  # non-strict bound
        status = PROVED if holds else NOT_ESTABLISHED
        return _verdict(NONUNIQ_SIGMA, NOT_UNIQUE_FOR_ALL_B, status, {"sigma_max_a": sigma_max})
    if variant == NONUNIQ_PSD:
        eig = sym_eigen(np.eye(n) - A.T @ A)
        holds = eig.is_positive_semidefinite()
        status = PROVED if holds else NOT_ESTABLISHED
        cert = {"min_eigenvalue": float(eig.eigenvalues[0])}
        return _verdict(NONUNIQ_PSD, NOT_UNIQUE_FOR_ALL_B, status, cert)
    if variant == NONUNIQ_EIG01:
        singular_a = is_singular(A)
        singular_shift = is_singular(A - np.eye(n))
        cert = {
            "singular_a": 1.0 if singular_a else 0.0,
            "singular_a_minus_i": 1.0 if singular_shift else 0.0,
        }
        status = PROVED if (singular_a or singular_shift) else NOT_ESTABLISHED
        return _verdict(NONUNIQ_EIG01, NOT_UNIQUE_FOR_ALL_B, status, cert)
    if variant == NONUNIQ_SINGULAR_INTERVAL:
        try:
            regular = oracle.interval_regularity(A, np.eye(n), cap=cap)
        except CapExceededError as exc:
            witness = oracle.search_contraction_witness(A, budget=witness_budget)
            if witness is None:
                return _verdict(
                    NONUNIQ_SINGULAR_INTERVAL, NOT_UNIQUE_FOR_ALL_B, INCONCLUSIVE,
                    {}, f"{exc}; no contraction witness found",
                )
            cert = {
                "witness_violation": oracle.contraction_violation(A, witness),
            }
            cert.update({f"witness_{i}": float(w) for i, w in enumerate(witness)})
            return _verdict(NONUNIQ_SINGULAR_INTERVAL, NOT_UNIQUE_FOR_ALL_B, PROVED, cert)
        cert = {"interval_regular": 1.0 if regular else 0.0}
        status = NOT_ESTABLISHED if regular else PROVED
        return _verdict(NONUNIQ_SINGULAR_INTERVAL, NOT_UNIQUE_FOR_ALL_B, status, cert)
    raise ValueError(f"unknown non-uniqueness variant {variant!r}")


def applicable_checkers(p: GaveProblem) -> tuple[str, ...]:
    """Checker ids that run_all evaluates for this problem.

    The GAVE family always applies; SYM_PD needs symmetric A and B; the
    AVE family needs B equal to the identity, and AVE_SIGNATURE
    additionally a symmetric A.
    """
    ids = [
        ROW_DOM, NORM_INF_BOUND, NORM_2, SV_ABS, SV_PLAIN, PD_SHIFT, PD_SHIFT_ABS,
        SIGMA_AINVB, RHO_ABS_AINVB, M_MATRIX, H_MATRIX,
        UNSOLV_DIRECT, UNSOLV_AINVB, UNSOLV_BINVA,
    ]
    if _is_symmetric(p.A) and _is_symmetric(p.B):
        ids.append(SYM_PD)
    if float(np.max(np.abs(p.B - np.eye(p.n)))) <= AVE_B_TOL:
        ids.extend([
            AVE_SIGMA, AVE_SIGMA_SHIFT,
            AVE_RESOLVENT_MINUS, AVE_RESOLVENT_PLUS, AVE_HERMITIAN,
            NONUNIQ_SIGMA, NONUNIQ_PSD, NONUNIQ_EIG01, NONUNIQ_SINGULAR_INTERVAL,
        ])
        if _is_symmetric(p.A):
            ids.append(AVE_SIGNATURE)
    return tuple(sorted(ids, key=CHECKER_ORDER.index))


def run_checker(p: GaveProblem, condition_id: str) -> Verdict:
    """Evaluate one checker by id on a problem."""
    A, B = p.A, p.B
    if condition_id == ROW_DOM:
        return check_row_dominance(A, B)
    if condition_id in (NORM_INF_BOUND, NORM_2):
        return check_norm_bound(A, B, condition_id)
    if condition_id in (SV_ABS, SV_PLAIN, PD_SHIFT, PD_SHIFT_ABS):
        return check_singular_values(A, B, condition_id)
    if condition_id in (SIGMA_AINVB, RHO_ABS_AINVB):
        return check_spectral(A, B, condition_id)
    if condition_id in (M_MATRIX, H_MATRIX):
        return check_m_or_h_matrix(A, B, condition_id)
    if condition_id == SYM_PD:
        return check_symmetric_pd(A, B)
    if condition_id in (UNSOLV_DIRECT, UNSOLV_AINVB, UNSOLV_BINVA):
        return check_unsolvable(p, condition_id)
    if condition_id in (AVE_SIGMA, AVE_SIGMA_SHIFT, AVE_SIGNATURE):
        return check_ave(A, condition_id)
    if condition_id in UNSOUND_CHECKERS:
        return check_ave_unsound(A, condition_id)
    if condition_id in (NONUNIQ_SIGMA, NONUNIQ_PSD, NONUNIQ_EIG01, NONUNIQ_SINGULAR_INTERVAL):
        return check_ave_nonunique(A, condition_id)
    raise ValueError(f"unknown checker id {condition_id!r}")


def run_all(p: GaveProblem, conditions=None) -> ConditionReport:
    """Run every applicable checker and aggregate into a report.

    Individual checker failures become Inconclusive entries; verdicts are
    listed in the fixed checker order regardless of evaluation order.
    """
    ids = applicable_checkers(p)
    if conditions is not None:
        requested = set(conditions)
        unknown = requested - set(CHECKER_ORDER)
        if unknown:
            raise ValueError(f"unknown checker ids: {sorted(unknown)}")
        ids = tuple(cid for cid in ids if cid in requested)
    verdicts = []
    for cid in ids:
        try:
            verdicts.append(run_checker(p, cid))
        except (
            SingularError,
            ConvergenceError,
            CapExceededError,
            NotSymmetricError,
            np.linalg.LinAlgError,
        ) as exc:
            claim = NOT_UNIQUE_FOR_ALL_B if cid.startswith("NONUNIQ") else (
                NO_SOLUTION_FOR_GIVEN_B if cid.startswith("UNSOLV") else UNIQUE_FOR_ALL_B
            )
            verdicts.append(_verdict(cid, claim, INCONCLUSIVE, {}, str(exc)))
    verdicts = tuple(verdicts)
    return ConditionReport(p.digest(), verdicts, summarize(verdicts))
