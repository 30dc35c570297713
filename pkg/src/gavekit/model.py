"""Problem instances, residual evaluation, and the verdict/report vocabulary.

A GAVE instance is A x - B |x| = b with square A, B and |x| entrywise; the
matrix-unknown variant carries a right-hand-side matrix F instead of b.
Everything here is an immutable value type.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ProblemFormatError
from .numkernel import as_matrix, as_square, as_vector, inf_norm

# claims a condition can establish
UNIQUE_FOR_ALL_B = "UniqueForAllB"
NO_SOLUTION_FOR_GIVEN_B = "NoSolutionForGivenB"
NOT_UNIQUE_FOR_ALL_B = "NotUniqueForAllB"
CLAIMS = (UNIQUE_FOR_ALL_B, NO_SOLUTION_FOR_GIVEN_B, NOT_UNIQUE_FOR_ALL_B)

# verdict statuses
PROVED = "Proved"
NOT_ESTABLISHED = "NotEstablished"
INCONCLUSIVE = "Inconclusive"
STATUSES = (PROVED, NOT_ESTABLISHED, INCONCLUSIVE)

# whether the underlying condition is trustworthy
SOUND = "Sound"
KNOWN_UNSOUND = "KnownUnsound"

# report summary when no claim was proved
NOTHING_ESTABLISHED = "NothingEstablished"

DEFAULT_SOLUTION_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class GaveProblem:
    """Instance of A x - B |x| = b."""

    A: np.ndarray
    B: np.ndarray
    b: np.ndarray

    def __init__(self, A, B, b):
        A = as_square(A)
        B = as_square(B)
        b = as_vector(b)
        if B.shape != A.shape:
            raise ValueError(f"B must be {A.shape[0]}x{A.shape[1]} to match A, got {B.shape}")
        if b.shape[0] != A.shape[0]:
            raise ValueError(f"b must have length {A.shape[0]}, got {b.shape[0]}")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return self.A.shape[0]

    def digest(self) -> str:
        return _digest("gave", (self.A, self.B, self.b))


@dataclass(frozen=True, eq=False)
class GavmeProblem:
    """Instance of A X - B |X| = F with F of shape n x m."""

    A: np.ndarray
    B: np.ndarray
    F: np.ndarray

    def __init__(self, A, B, F):
        A = as_square(A)
        B = as_square(B)
        F = as_matrix(F)
        if B.shape != A.shape:
            raise ValueError(f"B must be {A.shape[0]}x{A.shape[1]} to match A, got {B.shape}")
        if F.shape[0] != A.shape[0]:
            raise ValueError(f"F must have {A.shape[0]} rows, got {F.shape[0]}")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "F", F)

    @property
    def n(self) -> int:
        return self.A.shape[0]

    @property
    def m(self) -> int:
        return self.F.shape[1]

    def digest(self) -> str:
        return _digest("gavme", (self.A, self.B, self.F))

    def column(self, k: int) -> GaveProblem:
        return GaveProblem(self.A, self.B, self.F[:, k])


def _digest(kind: str, arrays) -> str:
    """Content digest: dimensions plus a hash of little-endian float64 bytes."""
    h = hashlib.sha256()
    h.update(kind.encode("ascii"))
    dims = []
    for a in arrays:
        for d in np.shape(a):
            h.update(int(d).to_bytes(4, "little"))
            dims.append(str(d))
        h.update(np.ascontiguousarray(a, dtype="<f8").tobytes())
    return f"{kind}:{'x'.join(dims)}:{h.hexdigest()}"


def residual(p: GaveProblem, x) -> float:
    """Infinity norm of A x - B |x| - b."""
    x = as_vector(x)
    if x.shape[0] != p.n:
        raise ValueError(f"x must have length {p.n}, got {x.shape[0]}")
    r = p.A @ x - p.B @ np.abs(x) - p.b
    return float(np.max(np.abs(r)))


def is_solution(p: GaveProblem, x, tol: float = DEFAULT_SOLUTION_TOL) -> bool:
    """True iff residual(p, x) <= tol * (1 + ||b||_inf)."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    return residual(p, x) <= tol * (1.0 + inf_norm(p.b))


def ave_view(A, b) -> GaveProblem:
    """The B = identity specialization A x - |x| = b."""
    A = as_square(A)
    return GaveProblem(A, np.eye(A.shape[0]), b)


@dataclass(frozen=True)
class Verdict:
    """Outcome of one condition check.

    certificate maps quantity names to finite floats; reason is a free-form
    note for humans and is not serialized.
    """

    condition_id: str
    claim: str
    status: str
    soundness: str
    certificate: dict[str, float] = field(default_factory=dict)
    reason: str = ""

    def __post_init__(self):
        if self.claim not in CLAIMS:
            raise ValueError(f"unknown claim {self.claim!r}")
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.soundness not in (SOUND, KNOWN_UNSOUND):
            raise ValueError(f"unknown soundness {self.soundness!r}")
        if self.soundness == KNOWN_UNSOUND and self.status == PROVED:
            raise ValueError("a known-unsound condition can never prove its claim")
        for name, value in self.certificate.items():
            if not math.isfinite(value):
                raise ValueError(f"certificate quantity {name!r} is not finite")

    def to_json_dict(self) -> dict:
        return {
            "id": self.condition_id,
            "claim": self.claim,
            "status": self.status,
            "soundness": self.soundness,
            "certificate": {k: float(v) for k, v in self.certificate.items()},
        }


def summarize(verdicts) -> str:
    """Strongest claim established by a sound, proved verdict."""
    proved = {v.claim for v in verdicts if v.status == PROVED and v.soundness == SOUND}
    for claim in (NO_SOLUTION_FOR_GIVEN_B, UNIQUE_FOR_ALL_B, NOT_UNIQUE_FOR_ALL_B):
        if claim in proved:
            return claim
    return NOTHING_ESTABLISHED


@dataclass(frozen=True)
class ConditionReport:
    """All checker verdicts for one problem plus the summary claim."""

    problem_digest: str
    verdicts: tuple[Verdict, ...]
    summary: str

    def __post_init__(self):
        if self.summary != summarize(self.verdicts):
            raise ValueError("summary does not follow from the verdicts")

    def to_json_dict(self) -> dict:
        return {
            "problem": self.problem_digest,
            "verdicts": [v.to_json_dict() for v in self.verdicts],
            "summary": self.summary,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)


@dataclass(frozen=True, eq=False)
class SolutionSet:
    """Result of exhaustive enumeration over sign patterns.

    degenerate_orthants counts sign patterns whose linearized system was
    singular; such orthants can hide solution continua, so consumers must
    not read "exactly one solution found" as a uniqueness proof when the
    count is nonzero.
    """

    solutions: tuple[np.ndarray, ...]
    degenerate_orthants: int
    cap_used: int

    def __len__(self) -> int:
        return len(self.solutions)


def _parse_matrix(rows, key: str) -> np.ndarray:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ProblemFormatError(f'"{key}" must be a nonempty array of rows')
    width = len(rows[0])
    for i, r in enumerate(rows):
        if len(r) != width:
            raise ProblemFormatError(
                f'"{key}" row {i} has {len(r)} entries, expected {width} (ragged input)'
            )
    try:
        return as_matrix(rows)
    except (TypeError, ValueError) as exc:
        raise ProblemFormatError(f'"{key}" is not a numeric matrix: {exc}') from exc


def problem_from_json_dict(data) -> GaveProblem | GavmeProblem:
    """Build a problem from the canonical JSON object.

    Keys: "A" (rows), optional "B" (defaults to identity), and exactly one
    of "b" (vector) or "F" (rows).
    """
    if not isinstance(data, dict):
        raise ProblemFormatError("problem JSON must be an object")
    unknown = set(data) - {"A", "B", "b", "F"}
    if unknown:
        raise ProblemFormatError(f"unknown keys in problem JSON: {sorted(unknown)}")
    if "A" not in data:
        raise ProblemFormatError('problem JSON requires key "A"')
    if ("b" in data) == ("F" in data):
        raise ProblemFormatError('exactly one of "b" or "F" must be present')
    A = _parse_matrix(data["A"], "A")
    if A.shape[0] != A.shape[1]:
        raise ProblemFormatError(f'"A" must be square, got {A.shape[0]}x{A.shape[1]}')
    if "B" in data:
        B = _parse_matrix(data["B"], "B")
    else:
        B = np.eye(A.shape[0])
    try:
        if "b" in data:
            if not isinstance(data["b"], list):
                raise ProblemFormatError('"b" must be an array of numbers')
            return GaveProblem(A, B, data["b"])
        F = _parse_matrix(data["F"], "F")
        return GavmeProblem(A, B, F)
    except (TypeError, ValueError) as exc:
        raise ProblemFormatError(str(exc)) from exc


def problem_to_json_dict(p: GaveProblem | GavmeProblem) -> dict:
    data = {"A": p.A.tolist(), "B": p.B.tolist()}
    if isinstance(p, GaveProblem):
        data["b"] = p.b.tolist()
    else:
        data["F"] = p.F.tolist()
    return data


def load_problem(path) -> GaveProblem | GavmeProblem:
    """Load a problem from a JSON file, with line context on parse errors."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    try:
        return problem_from_json_dict(data)
    except ProblemFormatError as exc:
        raise ProblemFormatError(f"{path}: {exc}") from exc
