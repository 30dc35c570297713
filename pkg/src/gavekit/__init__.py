"""Solvability analysis toolkit for generalized absolute value equations.

Checks catalogued sufficient conditions for unique solvability (and
unsolvability) of A x - B |x| = b, backs them with exact brute-force
oracles at small dimension, solves instances iteratively, handles the
matrix-unknown variant A X - B |X| = F column-wise, and benchmarks the
relative cost of the three classic uniqueness checks.
"""

from .checkers import CHECKER_ORDER, applicable_checkers, run_all, run_checker
from .errors import (
    CapExceededError,
    ConvergenceError,
    GavekitError,
    GavmeColumnError,
    NoConvergenceError,
    NotSymmetricError,
    ProblemFormatError,
    SingularError,
)
from .model import (
    ConditionReport,
    GaveProblem,
    GavmeProblem,
    SolutionSet,
    Verdict,
    ave_view,
    is_solution,
    load_problem,
    residual,
)
from .oracle import (
    enumerate_solutions,
    interval_regularity,
    search_contraction_witness,
    symmetric_interval_pd,
)
from .solvers import gavme_solve, newton_solve, picard_solve

__version__ = "0.1.0"

__all__ = [
    "CHECKER_ORDER",
    "CapExceededError",
    "ConditionReport",
    "ConvergenceError",
    "GaveProblem",
    "GavekitError",
    "GavmeColumnError",
    "GavmeProblem",
    "NoConvergenceError",
    "NotSymmetricError",
    "ProblemFormatError",
    "SingularError",
    "SolutionSet",
    "Verdict",
    "applicable_checkers",
    "ave_view",
    "enumerate_solutions",
    "gavme_solve",
    "interval_regularity",
    "is_solution",
    "load_problem",
    "newton_solve",
    "picard_solve",
    "residual",
    "run_all",
    "run_checker",
    "search_contraction_witness",
    "symmetric_interval_pd",
]
