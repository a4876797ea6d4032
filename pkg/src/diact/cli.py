"""Command-line front end.

Exit codes: 0 success, 2 unreadable input or bad usage, 3 validation or
viability failure, 4 unsupported kind/frame combination, 5 fixture
regression failure.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import datasets
from .csvio import read_matrix_csv, read_vector_csv, write_matrix_csv
from .errors import (
    CsvFormatError,
    DiactError,
    DimensionError,
    SeriesNotConvergedError,
    SingularMatrixError,
    UnknownFixtureError,
    UnsupportedCombinationError,
    ValidationError,
)
from .heatmap import render_heatmap
from .impact import CUMULATIVE, DemandSegment, impact
from .io_model import from_coefficients, from_transactions
from .make_use import MakeUseTables, system_from_make_use
from .report import dumps, new_report
from .requirements import Frame, Kind, LegacyVariant, legacy_indirect, requirements, subthroughflow
from .series import propagation_round, verify_system

EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_UNSUPPORTED = 4
EXIT_REGRESSION = 5


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _exit_code(err: DiactError) -> int:
    if isinstance(err, (CsvFormatError, UnknownFixtureError)):
        return EXIT_PARSE
    if isinstance(err, UnsupportedCombinationError):
        return EXIT_UNSUPPORTED
    if isinstance(err, (ValidationError, DimensionError, SingularMatrixError, SeriesNotConvergedError)):
        return EXIT_INVALID
    return 1


# ---------------------------------------------------------------------------
# system loading
# ---------------------------------------------------------------------------

def _add_system_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("system input (choose one source)")
    g.add_argument("--fixture", help="bundled fixture name, e.g. hypothetical or us-2006")
    g.add_argument("--coefficients", metavar="A.csv", help="technical coefficients CSV, or a fixture name")
    g.add_argument("--transactions", metavar="Z.csv", help="intermediate transactions CSV")
    g.add_argument("--use", metavar="U.csv", help="use table (commodities x industries)")
    g.add_argument("--make", metavar="V.csv", help="make table (industries x commodities)")
    g.add_argument("--final-demand", metavar="f.csv",
                   help="final demand vector; defaults to the fixture's, else all ones")
    g.add_argument("--allow-negative-demand", action="store_true",
                   help="accept negative final demand entries")


def _final_demand(args, n: int, fixture_f=None) -> tuple[np.ndarray, str]:
    if args.final_demand:
        f, _ = read_vector_csv(args.final_demand)
        return f, "file"
    if fixture_f is not None:
        return np.asarray(fixture_f), "fixture"
    return np.ones(n), "unit"


def load_system(args):
    """Build the IoSystem described by the parsed arguments.

    Returns ``(system, final_demand_source)``.
    """
    sources = [s for s in ("fixture", "coefficients", "transactions") if getattr(args, s)]
    if args.use or args.make:
        sources.append("make-use")
    if len(sources) != 1:
        raise CliError(EXIT_PARSE, "give exactly one of --fixture, --coefficients, --transactions, --use/--make")
    neg = args.allow_negative_demand
    src = sources[0]

    fixture_name = args.fixture
    if src == "coefficients" and not Path(args.coefficients).exists() and args.coefficients in datasets.CATALOG:
        fixture_name = args.coefficients
    if fixture_name:
        fix = datasets.load(fixture_name)
        f, how = _final_demand(args, fix.A.shape[0], fix.f)
        return from_coefficients(fix.A, f, fix.sector_names, allow_negative_final_demand=neg), how
    if src == "coefficients":
        a = read_matrix_csv(args.coefficients)
        f, how = _final_demand(args, a.values.shape[0])
        return from_coefficients(a.values, f, a.row_labels, allow_negative_final_demand=neg), how
    if src == "transactions":
        if not args.final_demand:
            raise CliError(EXIT_PARSE, "--transactions needs --final-demand")
        z = read_matrix_csv(args.transactions)
        f, how = _final_demand(args, z.values.shape[0])
        return from_transactions(z.values, f, z.row_labels, allow_negative_final_demand=neg), how
    if not (args.use and args.make):
        raise CliError(EXIT_PARSE, "--use and --make must be given together")
    u = read_matrix_csv(args.use)
    v = read_matrix_csv(args.make)
    tables = MakeUseTables(u.values, v.values, u.row_labels, v.row_labels)
    f, how = _final_demand(args, v.values.shape[0])
    return system_from_make_use(tables, f, allow_negative_final_demand=neg), how


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_derive(args) -> int:
    system, how = load_system(args)
    T = subthroughflow(system)
    report = new_report(system, final_demand_source=how, matrices={
        "Z": system.Z, "A": system.A, "L": system.L, "T": T.values,
    })
    _emit(dumps(report), args.out)
    return 0


def _selected(args):
    wanted = []
    if args.legacy and args.kind is None and args.frame is None:
        pass
    else:
        kinds = list(Kind) if (args.kind or "all") == "all" else [Kind(args.kind)]
        frames = list(Frame) if (args.frame or "all") == "all" else [Frame(args.frame)]
        wanted = [(k, fr) for fr in frames for k in kinds]
    return wanted


def cmd_requirements(args) -> int:
    system, how = load_system(args)
    names = list(system.sector_names)
    items = []  # (label, values, tags)
    for kind, frame in _selected(args):
        req = requirements(system, kind, frame)
        items.append((req.label, req.values, {"kind": kind.value, "frame": frame.value}))
    if args.legacy:
        variant = LegacyVariant(args.legacy)
        items.append((f"legacy-{variant.value}", legacy_indirect(system, variant), {"legacy": variant.value}))

    if args.format == "json":
        entries = [dict(tags, label=label, values=values) for label, values, tags in items]
        _emit(dumps(new_report(system, final_demand_source=how, requirements=entries)), args.out)
    elif len(items) == 1:
        _emit(write_matrix_csv(items[0][1], names, names), args.out)
    else:
        if not args.out:
            raise CliError(EXIT_PARSE, "several matrices selected: give --out DIR for CSV output")
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        manifest = {"sector_names": names, "matrices": []}
        for label, values, tags in items:
            (outdir / f"{label}.csv").write_text(write_matrix_csv(values, names, names), encoding="utf-8")
            manifest["matrices"].append(dict(tags, file=f"{label}.csv"))
        (outdir / "manifest.json").write_text(dumps(new_report(**manifest)), encoding="utf-8")

    if args.heatmap:
        target = Path(args.heatmap)
        for label, values, _ in items:
            path = target if len(items) == 1 else target.with_name(f"{target.stem}-{label}{target.suffix or '.svg'}")
            path.write_text(render_heatmap(values, names, names, title=label), encoding="utf-8")
    return 0


def cmd_impact(args) -> int:
    system, how = load_system(args)
    delta, _ = read_vector_csv(args.segment)
    seg = DemandSegment(Frame(args.frame), delta, allow_negative=args.allow_negative_segment)
    result = impact(system, seg, args.kind)
    report = new_report(system, final_demand_source=how, impact={
        "kind": result.kind, "frame": result.frame.value, "segment": seg.delta,
        "delta_T": result.delta_T, "delta_x": result.delta_x,
    })
    _emit(dumps(report), args.out)
    return 0


def cmd_oracle(args) -> int:
    system, how = load_system(args)
    rep = verify_system(system, tol=args.tol, cap=args.cap)
    rounds = []
    for n in range(args.rounds + 1):
        dist, vec = propagation_round(system, n)
        rounds.append({"n": n, "distribution": dist, "gross_output": vec})
    _emit(dumps(new_report(system, final_demand_source=how, oracle=rep, rounds=rounds)), args.out)
    return 0


def _regress_one(name: str, tol: float):
    fix = datasets.load(name)
    f = fix.f if fix.f is not None else np.ones(fix.A.shape[0])
    system = from_coefficients(fix.A, f, fix.sector_names)
    out = []
    for label in sorted(fix.published):
        frame, kind = label.split("-", 1)
        out.append(datasets.regression_compare(fix, requirements(system, kind, frame), tol))
    return out


def cmd_fixtures(args) -> int:
    if args.action == "list":
        for name in datasets.names():
            print(name)
        return 0
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        # US benchmark years first, then the worked example.
        order = [nm for nm in datasets.names() if nm.startswith("us-")]
        order += [nm for nm in datasets.names() if nm not in order]
        results = list(pool.map(lambda nm: _regress_one(nm, args.tol), order))
    first_fail = None
    for reports in results:
        for r in reports:
            status = "ok" if r.passed else "FAIL"
            print(f"{r.fixture:<13} {r.label:<19} max={r.max_abs:.3e} median={r.median_abs:.3e} {status}")
            if not r.passed and first_fail is None:
                first_fail = r
    if first_fail is not None:
        i, k = first_fail.worst_cell
        raise CliError(EXIT_REGRESSION,
                       f"regression failure: fixture {first_fail.fixture}, {first_fail.label}, "
                       f"cell ({i + 1},{k + 1}) deviates by {first_fail.max_abs:.3e} > {first_fail.tol:g}")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diact", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", help="gross output, coefficients, Leontief inverse, subthroughflows")
    _add_system_args(p)
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("requirements", help="direct/indirect/transfer requirements matrices")
    _add_system_args(p)
    p.add_argument("--kind", choices=["direct", "indirect", "transfer", "all"])
    p.add_argument("--frame", choices=["simple", "composite", "all"])
    p.add_argument("--legacy", choices=[v.value for v in LegacyVariant],
                   help="also (or only, without --kind/--frame) emit a legacy indirect-effects matrix")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", help="output file; a directory when several CSV matrices are written")
    p.add_argument("--heatmap", metavar="OUT.svg", help="also render SVG heatmaps")
    p.set_defaults(func=cmd_requirements)

    p = sub.add_parser("impact", help="response to a segment of final demand or gross output")
    _add_system_args(p)
    p.add_argument("--segment", required=True, metavar="seg.csv")
    p.add_argument("--frame", choices=["simple", "composite"], required=True)
    p.add_argument("--kind", choices=["direct", "indirect", "transfer", CUMULATIVE], required=True)
    p.add_argument("--allow-negative-segment", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_impact)

    p = sub.add_parser("fixtures", help="list bundled fixtures or run the regression suite")
    p.add_argument("action", choices=["list", "run"])
    p.add_argument("--tol", type=float, default=5e-3, help="max absolute deviation allowed (default 5e-3)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("oracle", help="check the Leontief inverse against its power series")
    _add_system_args(p)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--cap", type=int, default=1_000_000)
    p.add_argument("--rounds", type=int, default=0, help="also print propagation rounds 0..N")
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as err:
        print(f"diact: {err}", file=sys.stderr)
        return err.code
    except DiactError as err:
        print(f"diact: {type(err).__name__}: {err}", file=sys.stderr)
        return _exit_code(err)


if __name__ == "__main__":
    sys.exit(main())
