"""Command-line interface: ``tropsched {solve,validate,verify}``.

Exit codes: 0 success, 1 infeasible / failed check, 2 precondition or usage
error, 3 I/O or parse error.  Times are abstract units ("days" by
convention).
"""

from __future__ import annotations

import argparse
import json
import sys

from .exceptions import ShapeError
from .io import ProjectFileError, ScheduleReport, read_project, read_schedule
from .oracle import GridSpec, GridTooLargeError, grid_min_span
from .scheduler import AnchorPolicy, ProjectSpec, anchor, solve, validate

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_PRECONDITION = 2
EXIT_IO = 3


class CLIError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _load_project(path) -> ProjectSpec:
    try:
        return read_project(path)
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc.strerror}", EXIT_IO) from None
    except ProjectFileError as exc:
        raise CLIError(str(exc), EXIT_IO) from None
    except ValueError as exc:
        raise CLIError(f"{path}: {exc}", EXIT_IO) from None


def _fmt(v):
    v = float(v)
    return f"{int(v)}" if v.is_integer() else f"{v:g}"


def _table(report: ScheduleReport) -> str:
    width = max(8, *(len(a) for a in report.activities))
    lines = [f"{'activity':<{width}}  {'start':>10}  {'finish':>10}"]
    for a, s, f in zip(report.activities, report.start, report.finish):
        lines.append(f"{a:<{width}}  {_fmt(s):>10}  {_fmt(f):>10}")
    lines.append("")
    lines.append(f"span (delta): {_fmt(report.span)}")
    lines.append(f"alpha: {_fmt(report.alpha)}  anchor: {report.anchor}")
    lines.append(f"start-start constraints: {'applied' if report.constrained else 'ignored'}")
    if report.validation is not None:
        lines.append(f"validation: {'ok' if report.validation['ok'] else 'FAILED'}")
    return "\n".join(lines)


def cmd_solve(args, out) -> int:
    P = _load_project(args.project)
    try:
        policy = AnchorPolicy.parse(args.anchor)
    except ValueError as exc:
        raise CLIError(str(exc), EXIT_PRECONDITION) from None
    result = solve(P, ignore_start_start=args.ignore_start_start)
    if result.status == "infeasible":
        raise CLIError(f"infeasible: {result.message}", EXIT_INFEASIBLE)
    if result.status == "precondition":
        raise CLIError(f"precondition violated: {result.message}", EXIT_PRECONDITION)
    S = anchor(result.family, policy)
    checked = P.without_start_start() if args.ignore_start_start else P
    rep = validate(checked, S)
    report = ScheduleReport.from_schedule(
        P.names, S, constrained=result.family.constrained, validation=rep.to_dict(P.names)
    )
    text = report.dumps() if args.format == "structured" else _table(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(report.dumps() + "\n")
    print(text, file=out)
    return EXIT_OK


def cmd_validate(args, out) -> int:
    P = _load_project(args.project)
    try:
        report = read_schedule(args.schedule)
    except OSError as exc:
        raise CLIError(f"cannot read {args.schedule}: {exc.strerror}", EXIT_IO) from None
    except ProjectFileError as exc:
        raise CLIError(str(exc), EXIT_IO) from None
    if sorted(report.activities) != sorted(P.names) or len(set(report.activities)) != len(report.activities):
        raise CLIError(
            "schedule activities do not match the project: "
            f"{sorted(report.activities)} vs {sorted(P.names)}",
            EXIT_PRECONDITION,
        )
    # reorder to the project's activity order
    pos = [report.activities.index(name) for name in P.names]
    report = ScheduleReport(
        list(P.names),
        [report.start[k] for k in pos],
        [report.finish[k] for k in pos],
        report.span, report.alpha, report.anchor, report.constrained,
    )
    checked = P.without_start_start() if args.ignore_start_start else P
    rep = validate(checked, report.to_schedule(), atol=args.atol)
    if args.format == "structured":
        print(json.dumps(rep.to_dict(P.names), indent=2), file=out)
    else:
        if rep.ok:
            print("ok: all constraints satisfied", file=out)
        for msg in rep.messages:
            print(f"violation: {msg}", file=out)
    return EXIT_OK if rep.ok else EXIT_INFEASIBLE


def cmd_verify(args, out) -> int:
    P = _load_project(args.project)
    if args.ignore_start_start:
        P = P.without_start_start()
    try:
        grid = GridSpec.parse(args.grid, P.n, cap=args.cap)
    except GridTooLargeError as exc:
        raise CLIError(f"{exc} (try e.g. --grid=-8:0)", EXIT_PRECONDITION) from None
    except ValueError as exc:
        raise CLIError(str(exc), EXIT_PRECONDITION) from None
    result = solve(P)
    if result.status == "precondition":
        raise CLIError(f"precondition violated: {result.message}", EXIT_PRECONDITION)
    found = grid_min_span(P.C, P.D, grid)
    analytic = None if result.family is None else float(result.family.delta)
    lines = [
        f"analytic delta: {'infeasible' if analytic is None else _fmt(analytic)}",
        f"grid: [{grid.lo}, {grid.hi}] step {grid.step}, {grid.size} points, "
        f"{found.feasible_points} feasible",
    ]
    if found.feasible:
        arg = ", ".join(_fmt(v) for v in found.argmin)
        lines.append(f"oracle minimum: {_fmt(found.value)} at x = ({arg})")
    else:
        lines.append("oracle minimum: no feasible grid point")
    if analytic is None:
        match = not found.feasible
    else:
        match = found.feasible and found.value == analytic
    lines.append(f"verdict: {'match' if match else 'MISMATCH'}")
    if args.format == "structured":
        print(json.dumps({
            "analytic_delta": analytic,
            "oracle_min": found.value,
            "oracle_argmin": None if found.argmin is None else [_num(v) for v in found.argmin],
            "feasible_points": found.feasible_points,
            "match": bool(match),
        }, indent=2), file=out)
    else:
        print("\n".join(lines), file=out)
    return EXIT_OK if match else EXIT_INFEASIBLE


def _num(v):
    v = float(v)
    return int(v) if v.is_integer() else v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropsched",
        description="Just-in-time project scheduling by max-plus span minimization.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("table", "structured"), default="table")

    p = sub.add_parser("solve", parents=[fmt], help="compute an optimal schedule")
    p.add_argument("project", help="project JSON file")
    p.add_argument("--ignore-start-start", action="store_true",
                   help="drop start-start lags and solve the reduced problem")
    p.add_argument("--anchor", default="earliest",
                   help="alpha=<v>, due=<T> or earliest (default)")
    p.add_argument("-o", "--output", help="also write the structured schedule here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("validate", parents=[fmt], help="check a schedule against a project")
    p.add_argument("project")
    p.add_argument("schedule", help="schedule JSON file as written by 'solve'")
    p.add_argument("--atol", type=float, default=0.0, help="absolute tolerance (default exact)")
    p.add_argument("--ignore-start-start", action="store_true",
                   help="do not check start-start lags")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("verify", parents=[fmt], help="compare the solver with a grid search")
    p.add_argument("project")
    p.add_argument("--grid", default="-8:0", help="integer grid lo:hi[:step], e.g. --grid=-8:0 (the default)")
    p.add_argument("--cap", type=int, default=10**6, help="maximum number of grid points")
    p.add_argument("--ignore-start-start", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CLIError as exc:
        print(f"tropsched {args.command}: error: {exc}", file=sys.stderr)
        return exc.code
    except ShapeError as exc:
        print(f"tropsched {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"tropsched {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
