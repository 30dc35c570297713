"""Command-line front end: check, solve, enumerate, bench, gavme.

Problems are JSON objects with keys "A" (rows), optional "B" (defaults to
the identity), and exactly one of "b" (vector problem) or "F" (matrix
problem).  Exit codes are part of the contract so batch scripts can assert
fixtures: check returns 0 when a claim was proved and 2 when nothing was
established; solve returns 3 when the iteration gave up; enumerate returns
4 when the dimension cap is exceeded; input errors return 1.
"""

from __future__ import annotations

import argparse
import sys

from . import bench as bench_mod
from .checkers import CHECKER_ORDER, run_all
from .errors import (
    CapExceededError,
    GavekitError,
    GavmeColumnError,
    NoConvergenceError,
    ProblemFormatError,
    SingularError,
)
from .model import (
    GaveProblem,
    GavmeProblem,
    NOTHING_ESTABLISHED,
    load_problem,
    residual,
)
from .oracle import ENUM_CAP, enumerate_solutions
from .solvers import gavme_solve, newton_solve, picard_solve

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_NOTHING_ESTABLISHED = 2
EXIT_NO_CONVERGENCE = 3
EXIT_CAP_EXCEEDED = 4


def _fmt_vector(x) -> str:
    return "(" + ", ".join(f"{v:.10g}" for v in x) + ")"


def _fmt_matrix(X) -> str:
    return "\n".join("  [" + ", ".join(f"{v:.10g}" for v in row) + "]" for row in X)


def _print_report(report, as_json: bool) -> None:
    if as_json:
        print(report.to_json())
        return
    width = max(len(cid) for cid in CHECKER_ORDER)
    for v in report.verdicts:
        cert = ", ".join(f"{k}={val:.6g}" for k, val in sorted(v.certificate.items()))
        line = f"{v.condition_id:<{width}}  {v.status:<15} {v.claim:<20}"
        if v.soundness != "Sound":
            line += " [unsound]"
        if cert:
            line += f"  {cert}"
        if v.reason:
            line += f"  ({v.reason})"
        print(line)
    print(f"summary: {report.summary}")


def cmd_check(args) -> int:
    try:
        problem = load_problem(args.file)
    except (ProblemFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if isinstance(problem, GavmeProblem):
        print("error: check requires a vector problem (key \"b\")", file=sys.stderr)
        return EXIT_INPUT_ERROR
    conditions = None
    if args.conditions:
        conditions = [c.strip() for c in args.conditions.split(",") if c.strip()]
        unknown = set(conditions) - set(CHECKER_ORDER)
        if unknown:
            print(f"error: unknown condition ids: {sorted(unknown)}", file=sys.stderr)
            return EXIT_INPUT_ERROR
    report = run_all(problem, conditions=conditions)
    _print_report(report, args.json)
    return EXIT_OK if report.summary != NOTHING_ESTABLISHED else EXIT_NOTHING_ESTABLISHED


def _solve_gave(problem: GaveProblem, args) -> int:
    solver = picard_solve if args.method == "picard" else newton_solve
    try:
        x = solver(problem, tol=args.tol, maxit=args.maxit)
    except NoConvergenceError as exc:
        print(f"no convergence: {exc}", file=sys.stderr)
        if exc.last_iterate is not None:
            print(f"last iterate: {_fmt_vector(exc.last_iterate)}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except SingularError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    print(f"x = {_fmt_vector(x)}")
    print(f"residual = {residual(problem, x):.3e}")
    return EXIT_OK


def _solve_gavme(problem: GavmeProblem, args) -> int:
    try:
        X = gavme_solve(problem, method=args.method, tol=args.tol, maxit=args.maxit)
    except GavmeColumnError as exc:
        print(f"no convergence: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    print("X =")
    print(_fmt_matrix(X))
    max_r = max(
        residual(problem.column(k), X[:, k]) for k in range(problem.m)
    )
    print(f"max column residual = {max_r:.3e}")
    return EXIT_OK


def cmd_solve(args) -> int:
    try:
        problem = load_problem(args.file)
    except (ProblemFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if isinstance(problem, GavmeProblem):
        return _solve_gavme(problem, args)
    return _solve_gave(problem, args)


def cmd_enumerate(args) -> int:
    try:
        problem = load_problem(args.file)
    except (ProblemFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if isinstance(problem, GavmeProblem):
        print("error: enumerate requires a vector problem (key \"b\")", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        found = enumerate_solutions(problem, cap=args.cap)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    print(f"{len(found)} solution(s)")
    for x in found.solutions:
        print(f"  {_fmt_vector(x)}")
    print(f"degenerate orthants: {found.degenerate_orthants}")
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.sizes:
        try:
            sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
        except ValueError:
            print(f"error: --sizes must be a comma-separated list of integers",
                  file=sys.stderr)
            return EXIT_INPUT_ERROR
    else:
        sizes = list(bench_mod.FULL_SIZES if args.full else bench_mod.DEFAULT_SIZES)
    try:
        rows = bench_mod.bench_conditions(sizes)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    csv_text = bench_mod.rows_to_csv(rows)
    if args.out:
        try:
            bench_mod.write_csv(rows, args.out)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_INPUT_ERROR
        ordering_stream = sys.stdout
    else:
        sys.stdout.write(csv_text)
        ordering_stream = sys.stderr
    for n in sizes:
        if n < bench_mod.ORDERING_MIN_N:
            print(f"n={n}: ordering not asserted below n={bench_mod.ORDERING_MIN_N}",
                  file=ordering_stream)
            continue
        verdict = "pass" if bench_mod.ordering_holds(rows, n) else "fail"
        print(f"n={n}: ordering ROW_DOM < SIGMA_AINVB < RHO_ABS_AINVB: {verdict}",
              file=ordering_stream)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gavekit",
        description="Solvability analysis for generalized absolute value equations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run solvability checkers on a problem file")
    p_check.add_argument("file")
    p_check.add_argument("--conditions", help="comma-separated checker ids to run")
    p_check.add_argument("--json", action="store_true", help="print the report as JSON")
    p_check.set_defaults(func=cmd_check)

    for name, help_text in (
        ("solve", "solve a problem iteratively"),
        ("gavme", "solve a matrix-unknown problem (alias of solve)"),
    ):
        p_solve = sub.add_parser(name, help=help_text)
        p_solve.add_argument("file")
        p_solve.add_argument("--method", choices=("picard", "newton"), default="picard")
        p_solve.add_argument("--tol", type=float, default=1e-10)
        p_solve.add_argument("--maxit", type=int, default=10_000)
        p_solve.set_defaults(func=cmd_solve)

    p_enum = sub.add_parser("enumerate", help="enumerate all solutions (small n)")
    p_enum.add_argument("file")
    p_enum.add_argument("--cap", type=int, default=ENUM_CAP)
    p_enum.set_defaults(func=cmd_enumerate)

    p_bench = sub.add_parser("bench", help="time the three uniqueness conditions")
    p_bench.add_argument("--sizes", help="comma-separated matrix sizes")
    p_bench.add_argument("--out", help="write CSV here instead of stdout")
    p_bench.add_argument("--full", action="store_true",
                         help="also run the large sizes (3000, 4000, 5000)")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GavekitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
