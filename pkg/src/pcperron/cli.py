"""Command-line front end.

Exit codes: 0 success / efficient, 1 input or validation error,
2 construction impossible, 3 inefficient Perron vector (analyze, char4).
Vertex labels and column choices are 1-based on the command line.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import fileio
from .char4 import characterize_4x4
from .efficiency import EDGE_TOL, is_efficient, subvector_efficiency_profile
from .errors import ConsistentInputAtFullOrder, ReciprocalError, WrongOrder
from .extension import (
    extend_constant_row_sums,
    extend_efficient,
    extend_inefficient,
    extend_with_perron,
)
from .generators import (
    DEFAULT_SCALE,
    block_double,
    bordered_growth,
    bozoki,
    random_consistent,
    random_reciprocal,
    toeplitz_alt,
)
from .matrix import FIXTURE_TOL, as_weights, ones, validate
from .spectral import geometric_mean_vector, perron
from .survey import SurveyConfig, run_survey, survey_csv, survey_dicts
from .wellbehaved import classify

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_IMPOSSIBLE = 2
EXIT_INEFFICIENT = 3

_KIND_TEXT = {"TypeI": "type I", "TypeII": "type II", "NotWellBehaved": "not well-behaved"}


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _load_matrix(path: str, tol: float | None):
    arr, file_tol = fileio.parse_matrix_text(_read_text(path))
    if tol is None:
        tol = file_tol if file_tol is not None else FIXTURE_TOL
    return validate(arr, tol)


def _text_value(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, float):
        return format(v, ".10g")
    if v is None:
        return "none"
    if isinstance(v, list):
        if v and all(isinstance(x, list) for x in v):
            return "\n" + "\n".join("    " + " ".join(_text_value(x) for x in row) for row in v)
        return " ".join(_text_value(x) for x in v) if v else "none"
    if isinstance(v, dict):
        return "\n" + "\n".join(f"    {k}: {_text_value(x)}" for k, x in v.items())
    return str(v)


def _emit(report: dict, as_json: bool, out) -> None:
    if as_json:
        out.write(fileio.dumps(report))
    else:
        for key, value in report.items():
            out.write(f"{key.replace('_', ' ')}: {_text_value(value)}\n")


def _plain(obj):
    """Recursively convert numpy containers to builtin types."""
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, np.generic):
        return obj.item()
    return obj


# --- subcommands ------------------------------------------------------------


def cmd_analyze(args, out) -> int:
    a = _load_matrix(args.matrix, args.fixture_tol)
    p = perron(a)
    if args.vector == "perron":
        w = p.vector
    elif args.vector == "geomean":
        w = geometric_mean_vector(a)
    else:
        w = as_weights(fileio.parse_vector_text(_read_text(args.vector)), a.order)
    rep = is_efficient(a, w, args.tolerance)
    cls = classify(a)
    profile = (
        [bool(x) for x in subvector_efficiency_profile(a, w, args.tolerance)] if a.order >= 3 else None
    )
    eff = rep.to_dict()
    report = {
        "order": a.order,
        "perron_eigenvalue": p.eigenvalue,
        "perron_vector": p.vector.tolist(),
        "perron_residual": p.residual,
        "vector_source": args.vector if args.vector in ("perron", "geomean") else "file",
        "vector": np.asarray(w).tolist(),
        "efficient": rep.efficient,
        "sccs": eff["sccs"],
        "sinks": eff["sinks"],
        "sources": eff["sources"],
        "adjacency": eff["adjacency"],
        "well_behaved": _KIND_TEXT[cls.kind.value],
        "row_sum_gap": cls.gap,
        "boundary_value": cls.boundary_value,
        "subvector_profile": profile,
    }
    _emit(report, args.json, out)
    return EXIT_OK if rep.efficient else EXIT_INEFFICIENT


def cmd_extend(args, out) -> int:
    b = _load_matrix(args.matrix, args.fixture_tol)
    mode = args.mode
    if mode == "constant":
        res = extend_constant_row_sums(b)
    elif mode == "perron":
        if args.perron_vector is None:
            raise UsageError("--mode perron needs --perron-vector")
        res = extend_with_perron(b, fileio.parse_vector_text(_read_text(args.perron_vector)))
    elif mode == "inefficient":
        target = args.target_order if args.target_order is not None else b.order + 1
        inter = _load_matrix(args.intermediate, args.fixture_tol) if args.intermediate else None
        if inter is None and target > b.order + 1 and args.seed is None:
            raise UsageError("growing the intermediate matrix is random: pass --seed")
        res = extend_inefficient(b, target, a=args.a, c=args.c, seed=args.seed, intermediate=inter)
    else:
        res = extend_efficient(b, args.column - 1)
    p = perron(res.matrix)
    rep = is_efficient(res.matrix, p.vector, args.tolerance)
    report = _plain(res.to_dict())
    report["perron_vector"] = p.vector.tolist()
    report["efficient"] = rep.efficient
    report["sinks"] = [v + 1 for v in rep.sinks]
    if args.out:
        fileio.write_matrix(res.matrix, args.out)
    _emit(report, args.json, out)
    return EXIT_OK


def cmd_generate(args, out) -> int:
    fam = args.family
    if fam in ("random", "consistent") and args.seed is None:
        raise UsageError(f"--family {fam} requires an explicit --seed")
    if fam == "bozoki":
        m = bozoki(args.order, args.b)
    elif fam == "toeplitz":
        m = toeplitz_alt(args.order, args.b)
    elif fam == "blockdouble":
        t0 = _load_matrix(args.inputs[0], args.fixture_tol) if args.inputs else bozoki(args.order, args.b)
        t1 = _load_matrix(args.inputs[1], args.fixture_tol) if len(args.inputs or []) > 1 else ones(t0.order)
        m = block_double(t0, t1)
    elif fam == "border":
        t0 = _load_matrix(args.inputs[0], args.fixture_tol) if args.inputs else bozoki(args.order, args.b)
        m = bordered_growth(t0)
    elif fam == "random":
        m = random_reciprocal(args.order, args.scale, args.seed)
    else:
        m = random_consistent(args.order, args.scale, args.seed)
    text = fileio.matrix_to_csv(m) if args.format == "csv" else fileio.matrix_to_json(m)
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_char4(args, out) -> int:
    a = _load_matrix(args.matrix, args.fixture_tol)
    if a.order != 4:
        raise WrongOrder(f"char4 needs a 4x4 matrix, got order {a.order}")
    wit = characterize_4x4(a, args.tolerance)
    _emit(_plain(wit.to_dict()), args.json, out)
    return EXIT_INEFFICIENT if wit.inefficient else EXIT_OK


def _parse_dims(values) -> list[int]:
    dims = []
    for v in values:
        dims.extend(int(x) for x in str(v).split(",") if x.strip())
    return dims


def cmd_survey(args, out) -> int:
    if args.seed is None:
        raise UsageError("survey requires an explicit --seed")
    cfg = SurveyConfig(
        dims=tuple(_parse_dims(args.dims)),
        samples_per_dim=args.samples,
        scale=args.scale,
        seed=args.seed,
        workers=args.workers,
    )
    rows = run_survey(cfg)
    text = fileio.dumps(survey_dicts(rows)) if args.json else survey_csv(rows)
    if args.csv:
        Path(args.csv).write_text(survey_csv(rows))
    if args.json or not args.csv:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcperron",
        description="Perron-vector efficiency analysis and extensions of reciprocal matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, matrix=True):
        if matrix:
            p.add_argument("matrix", help="matrix file (CSV or JSON); '-' reads standard input")
        p.add_argument(
            "--fixture-tol",
            type=float,
            default=None,
            help=f"reciprocity tolerance for validation (default: file's own, else {FIXTURE_TOL:g})",
        )
        p.add_argument(
            "--tolerance", type=float, default=EDGE_TOL, help="relative edge tolerance of the digraph"
        )
        p.add_argument("--json", action="store_true", help="structured output instead of text")

    p = sub.add_parser("analyze", help="Perron pair, efficiency, well-behaved class")
    common(p)
    p.add_argument("--vector", default="perron", help="'perron', 'geomean' or a vector file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("extend", help="one-row extensions")
    common(p)
    p.add_argument("--mode", choices=["perron", "inefficient", "efficient", "constant"], required=True)
    p.add_argument("--perron-vector", help="vector file for --mode perron")
    p.add_argument("--target-order", type=int)
    p.add_argument("--intermediate", help="inconsistent order n-1 matrix containing B (inefficient mode)")
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--column", type=int, default=1, help="1-based column used by --mode efficient")
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help="write the extended matrix here (.csv or .json)")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("generate", help="structured and random matrices")
    p.add_argument(
        "--family",
        choices=["bozoki", "toeplitz", "blockdouble", "border", "random", "consistent"],
        required=True,
    )
    p.add_argument("--order", type=int, default=3)
    p.add_argument("--b", type=float, default=2.0)
    p.add_argument("--scale", type=float, default=DEFAULT_SCALE)
    p.add_argument("--seed", type=int)
    p.add_argument("--inputs", nargs="+", help="input blocks for blockdouble/border")
    p.add_argument("--fixture-tol", type=float, default=None)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("char4", help="4x4 inefficiency witness")
    common(p)
    p.set_defaults(func=cmd_char4)

    p = sub.add_parser("survey", help="Monte Carlo inefficiency survey")
    p.add_argument("--dims", nargs="+", required=True, help="e.g. 3 4 5 or 3,4,5")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--scale", type=float, default=DEFAULT_SCALE)
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--csv", help="write the CSV table to this path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ConsistentInputAtFullOrder as exc:
        print(f"error: construction impossible: {exc}", file=sys.stderr)
        return EXIT_IMPOSSIBLE
    except (ReciprocalError, UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
