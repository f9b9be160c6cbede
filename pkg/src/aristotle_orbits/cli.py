"""Command-line surface.

Six subcommands: ``classify`` and ``invariants`` label dual points,
``simulate`` produces trajectories, ``verify`` runs the self-check suite,
``errata`` emits the printed-formula audit, and ``derive-law``
reconstructs the group law's polynomial coefficients.

Exit codes: 0 success, 1 usage or parse error, 2 verification or
adjudication failure.  Data goes to standard output (or ``--out``);
diagnostics go to standard error.  Identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional

from . import derive_law as derive_law_mod
from . import errata as errata_mod
from . import verify as verify_mod
from .backend import (
    BACKENDS, EPS_CLASS, RATIONAL, InputFormatError,
    format_scalar, json_scalar, parse_scalar,
)
from .dynamics import (
    ChartUndefinedError, IntegratorConfig, OrbitParams, Trajectory,
    closed_form_trajectory, dual_flow_trajectory, integrate,
)
from .orbits import DualElement, classify, invariants, orbit_dimension

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2

POINT_FIELDS = ("p", "e", "f", "k", "y")
# CSV output order for invariant columns; "f" is renamed to avoid
# colliding with the input force column
INVARIANT_COLUMNS = ("psi", "v", "s", "q", "tau", "u", "pi", "f")
INVARIANT_HEADERS = ("psi", "v", "s", "q", "tau", "u", "pi", "f_invariant")


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; the contract is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------- input

def _parse_fields(text: str, count: int, backend: str, where: str) -> list:
    fields = [f.strip() for f in text.split(",")]
    if len(fields) != count:
        raise InputFormatError(
            f"{where}: expected {count} comma-separated values, "
            f"got {len(fields)}")
    values = []
    for column, field in enumerate(fields, start=1):
        try:
            values.append(parse_scalar(field, backend))
        except InputFormatError as exc:
            raise InputFormatError(f"{where}, field {column}: {exc}") from exc
    return values


def _parse_point(text: str, backend: str, where: str) -> DualElement:
    return DualElement.from_seq(_parse_fields(text, 5, backend, where))


def _load_points_json(path: str, text: str, backend: str) -> list:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(
            f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}")
    if (isinstance(data, list) and len(data) == 5
            and not any(isinstance(c, list) for c in data)):
        data = [data]
    if not (isinstance(data, list) and data
            and all(isinstance(row, list) for row in data)):
        raise InputFormatError(
            f"{path}: expected a [p, e, f, k, y] array or an array of them")
    points = []
    for index, row in enumerate(data, start=1):
        if len(row) != 5:
            raise InputFormatError(
                f"{path}: entry {index}: expected 5 values, got {len(row)}")
        try:
            points.append(DualElement.from_seq(
                [parse_scalar(c, backend) for c in row]))
        except InputFormatError as exc:
            raise InputFormatError(f"{path}: entry {index}: {exc}") from exc
    return points


def _load_points_file(path: str, backend: str) -> list:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}")
    if path.endswith(".json"):
        return _load_points_json(path, text, backend)
    points = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if (lineno == 1 and tuple(f.strip().lower() for f in line.split(","))
                == POINT_FIELDS):
            continue
        points.append(_parse_point(line, backend, f"{path}: line {lineno}"))
    if not points:
        raise InputFormatError(f"{path}: no points found")
    return points


def _gather_points(args) -> list:
    if args.in_path and args.points:
        raise InputFormatError("give points inline or via --in, not both")
    if args.in_path:
        return _load_points_file(args.in_path, args.backend)
    if not args.points:
        raise InputFormatError(
            'no input points; pass "p,e,f,k,y" arguments or --in PATH')
    return [_parse_point(text, args.backend, f"point {i}")
            for i, text in enumerate(args.points, start=1)]


# --------------------------------------------------------------- output

def _dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _csv_text(header, rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _emit(text: str, out_path: Optional[str]):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


# ------------------------------------------------------------- commands

def _point_records(args):
    points = _gather_points(args)
    records = []
    for mu in points:
        inv = invariants(mu, tol=args.tol)
        records.append((mu, classify(mu, tol=args.tol),
                        orbit_dimension(mu, tol=args.tol), inv))
    return records


def _invariant_cells(inv) -> list:
    return [format_scalar(getattr(inv, name)) if getattr(inv, name) is not None
            else "" for name in INVARIANT_COLUMNS]


def _cmd_classify(args) -> int:
    records = _point_records(args)
    if args.format == "json":
        payload = {
            "backend": args.backend,
            "points": [{
                "input": [json_scalar(c) for c in mu.as_tuple()],
                "class": cls.value,
                "orbit_dimension": dim,
                "invariants": {name: json_scalar(value)
                               for name, value in inv.as_dict().items()},
            } for mu, cls, dim, inv in records],
        }
        _emit(_dump_json(payload), args.out)
    else:
        header = POINT_FIELDS + ("class", "dimension") + INVARIANT_HEADERS
        rows = [[format_scalar(c) for c in mu.as_tuple()]
                + [cls.value, str(dim)] + _invariant_cells(inv)
                for mu, cls, dim, inv in records]
        _emit(_csv_text(header, rows), args.out)
    return EXIT_OK


def _cmd_invariants(args) -> int:
    records = _point_records(args)
    if args.format == "json":
        payload = {
            "backend": args.backend,
            "points": [{
                "input": [json_scalar(c) for c in mu.as_tuple()],
                "invariants": {name: json_scalar(value)
                               for name, value in inv.as_dict().items()},
            } for mu, _cls, _dim, inv in records],
        }
        _emit(_dump_json(payload), args.out)
    else:
        header = POINT_FIELDS + INVARIANT_HEADERS
        rows = [[format_scalar(c) for c in mu.as_tuple()]
                + _invariant_cells(inv) for mu, _cls, _dim, inv in records]
        _emit(_csv_text(header, rows), args.out)
    return EXIT_OK


def _parse_range(text: str, backend: str) -> tuple:
    parts = text.split(":")
    if len(parts) != 2:
        raise InputFormatError(f"--range: expected A:B, got {text!r}")
    start = parse_scalar(parts[0].strip(), backend)
    stop = parse_scalar(parts[1].strip(), backend)
    return start, stop


def _trajectory_payload(trajectory: Trajectory) -> dict:
    return {
        "picture": trajectory.picture,
        "columns": list(trajectory.columns),
        "invariant": trajectory.invariant_name,
        "method": trajectory.method,
        "params": {name: json_scalar(value)
                   for name, value in trajectory.params.items()},
        "rows": [[json_scalar(c) for c in row] for row in trajectory.rows],
    }


def _cmd_simulate(args) -> int:
    start, stop = _parse_range(args.range, args.backend)
    step = parse_scalar(args.step, args.backend)
    try:
        config = IntegratorConfig(step=step, start=start, stop=stop)
    except ValueError as exc:
        raise InputFormatError(str(exc))

    if args.f0 is not None and (args.dual or not args.closed_form
                                or args.picture != "space"):
        raise InputFormatError(
            "--f0 applies only to --picture space --closed-form")

    if args.dual:
        if args.mu is None:
            raise InputFormatError("--dual requires --mu \"p,e,f,k,y\"")
        mu = _parse_point(args.mu, args.backend, "--mu")
        trajectory = dual_flow_trajectory(mu, args.picture, config)
    else:
        if args.state is None or args.k is None or args.y is None:
            raise InputFormatError(
                "simulate needs --state, --k and --y (or --dual with --mu)")
        state = _parse_fields(args.state, 2, args.backend, "--state")
        params = OrbitParams(parse_scalar(args.k, args.backend),
                             parse_scalar(args.y, args.backend))
        if args.closed_form:
            f0 = None if args.f0 is None else parse_scalar(args.f0,
                                                           args.backend)
            trajectory = closed_form_trajectory(args.picture, state, params,
                                                config, f0=f0)
        else:
            trajectory = integrate(args.picture, state, params, config)

    if args.format == "json":
        _emit(_dump_json(_trajectory_payload(trajectory)), args.out)
    else:
        rows = [[format_scalar(c) for c in row] for row in trajectory.rows]
        _emit(_csv_text(trajectory.columns, rows), args.out)
    return EXIT_OK


def _require_rational(args, what: str):
    if args.backend != RATIONAL:
        raise InputFormatError(f"{what} adjudicates exactly and runs on the "
                               f"rational backend only")


def _cmd_verify(args) -> int:
    _require_rational(args, "verify")
    if args.mutate is not None and args.mutate not in verify_mod.MUTATIONS:
        known = ", ".join(sorted(verify_mod.MUTATIONS))
        raise InputFormatError(
            f"unknown mutation id {args.mutate!r}; known: {known}")
    report = verify_mod.run_suite(seed=args.seed, samples=args.samples,
                                  mutation=args.mutate)
    if args.format == "json":
        _emit(_dump_json(report), args.out)
    else:
        _emit(verify_mod.render_text(report) + "\n", args.out)
    return EXIT_OK if report["all_passed"] else EXIT_FAILED


def _cmd_errata(args) -> int:
    _require_rational(args, "errata")
    report = errata_mod.build_report(seed=args.seed)
    if args.format == "json":
        _emit(_dump_json(report), args.out)
    else:
        _emit(errata_mod.render_text(report) + "\n", args.out)
    return EXIT_OK


def _render_law_table(table: list, verified: int) -> str:
    lines = [
        "derived group law, exact polynomial reconstruction",
        "==================================================",
        f"verified against the composition on {verified} fresh points",
        "",
    ]
    for entry in table:
        status = "agrees with printed form" if entry["agrees"] \
            else "DISAGREES with printed form"
        lines.append(f"{entry['coordinate']}   [{status}]")
        width = max(len(row["monomial"]) for row in entry["monomials"])
        for row in entry["monomials"]:
            lines.append(
                f"  {row['monomial']:<{width}}   derived {row['derived']!s:>6}"
                f"   printed {row['printed']!s:>6}   {row['verdict']}")
        lines.append("")
    return "\n".join(lines)


def _cmd_derive_law(args) -> int:
    _require_rational(args, "derive-law")
    derived = derive_law_mod.reconstruct_law()
    verified = derive_law_mod.verify_reconstruction(
        derived, samples=args.samples, seed=args.seed)
    printed = derive_law_mod.printed_law_polynomials()
    table = derive_law_mod.comparison_table(derived, printed)
    if args.format == "json":
        payload = {
            "backend": args.backend,
            "seed": args.seed,
            "samples_verified": verified,
            "coordinates": [{
                "coordinate": entry["coordinate"],
                "agrees": entry["agrees"],
                "monomials": [{
                    "monomial": row["monomial"],
                    "derived": json_scalar(row["derived"]),
                    "printed": json_scalar(row["printed"]),
                    "verdict": row["verdict"],
                } for row in entry["monomials"]],
            } for entry in table],
        }
        _emit(_dump_json(payload), args.out)
    else:
        _emit(_render_law_table(table, verified) + "\n", args.out)
    return EXIT_OK


# -------------------------------------------------------------- wiring

def _add_output_options(parser, formats, default_format):
    parser.add_argument("--backend", choices=BACKENDS, default=RATIONAL,
                        help="numeric backend (default rational)")
    parser.add_argument("--format", choices=formats, default=default_format,
                        help=f"output format (default {default_format})")
    parser.add_argument("--out", metavar="PATH",
                        help="write output to PATH instead of stdout")


def _add_point_options(parser):
    parser.add_argument("points", nargs="*", metavar="POINT",
                        help='dual points as "p,e,f,k,y"')
    parser.add_argument("--in", dest="in_path", metavar="PATH",
                        help="read points from a JSON or CSV file")
    parser.add_argument("--tol", type=float, default=EPS_CLASS,
                        help="zero tolerance for float classification")


def build_parser() -> _Parser:
    parser = _Parser(
        prog="aristotle-orbits",
        description="Coadjoint orbits and dynamics of the doubly "
                    "centrally extended (1+1) Aristotle group.")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("classify",
                       help="orbit class, dimension and invariants")
    _add_point_options(p)
    _add_output_options(p, ("json", "csv"), "json")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("invariants", help="orbit invariants only")
    _add_point_options(p)
    _add_output_options(p, ("json", "csv"), "json")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("simulate", help="evolve a state or a dual point")
    p.add_argument("--picture", choices=("time", "space"), required=True,
                   help="evolution parameter: t (time) or x (space)")
    p.add_argument("--state", metavar="C1,C2",
                   help='chart state "q,p" (time) or "tau,e" (space)')
    p.add_argument("--k", help="Hooke constant")
    p.add_argument("--y", help="yank")
    p.add_argument("--f0", help="initial force (space closed form only; "
                                "defaults to the on-orbit value y*tau0)")
    p.add_argument("--mu", metavar="P,E,F,K,Y",
                   help="dual point for --dual mode")
    p.add_argument("--range", default="0:10", metavar="A:B",
                   help="parameter range (default 0:10)")
    p.add_argument("--step", default="0.001", metavar="H",
                   help="grid step (default 0.001)")
    p.add_argument("--closed-form", action="store_true",
                   help="sample the exact solution instead of integrating")
    p.add_argument("--dual", action="store_true",
                   help="evolve (p,e,f) on the dual; total, needs no chart")
    _add_output_options(p, ("json", "csv"), "csv")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("verify", help="run the structural self-check suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000,
                   help="random samples per check (default 1000)")
    p.add_argument("--mutate", metavar="ID",
                   help="run against a deliberately broken structure tensor")
    _add_output_options(p, ("text", "json"), "text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("errata",
                       help="audit printed formulas against derived ones")
    p.add_argument("--seed", type=int, default=0)
    _add_output_options(p, ("text", "json"), "text")
    p.set_defaults(func=_cmd_errata)

    p = sub.add_parser("derive-law",
                       help="reconstruct the group law's polynomials")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000,
                   help="fresh verification points (default 1000)")
    _add_output_options(p, ("text", "json"), "text")
    p.set_defaults(func=_cmd_derive_law)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputFormatError, ChartUndefinedError) as exc:
        print(f"aristotle-orbits: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"aristotle-orbits: error: {exc}", file=sys.stderr)
        return EXIT_FAILED


def entrypoint():
    sys.exit(main())
