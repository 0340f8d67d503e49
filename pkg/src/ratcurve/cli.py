"""Command-line interface.

    ratcurve analyze --fx <expr> --fy <expr> --fz <expr> [options]
    ratcurve analyze --input curve.json [options]

Exit codes: 0 success; 2 parse or usage error; 3 improper parameterization;
4 analysis completed but some classification is inconclusive; 5 an internal
cross-check failed (a bug, not bad input).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import parser as formparse
from .curves import CurveError
from .numeric import AmbiguousCluster, PrecisionExhausted
from .pipeline import (
    AnalysisOptions,
    DivisibilityFailure,
    GlobalDeltaMismatch,
    InternalInconsistency,
    NegativeCount,
)
from .points import NotReduced
from .report import build_document, render, resolve_modes

USAGE_EXIT = 2
IMPROPER_EXIT = 3
INCONCLUSIVE_EXIT = 4
INCONSISTENT_EXIT = 5

_PARSE_ERROR_CODES = {"DegreeMismatch", "DegreeTooSmall"}


def _build_argparser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ratcurve",
        description="Singular points of parameterized plane rational curves.",
    )
    sub = ap.add_subparsers(dest="command", required=True)
    an = sub.add_parser(
        "analyze", help="analyze one curve given by three binary forms"
    )
    an.add_argument("--fx", help="first coordinate, a form in s and t")
    an.add_argument("--fy", help="second coordinate")
    an.add_argument("--fz", help="third coordinate")
    an.add_argument(
        "--input", help="JSON file {\"f\": [fx, fy, fz], ...} ('-' for stdin)"
    )
    an.add_argument("--label", help="name echoed into the report")
    an.add_argument(
        "--mode",
        default="all",
        help="comma-separated: count,branches,ideals,coords,classify,real,all",
    )
    an.add_argument("--precision-bits", type=int, default=None)
    an.add_argument("--cluster-tol", type=float, default=None)
    an.add_argument("--format", choices=("json", "text"), default="json")
    an.add_argument("--oracle", choices=("on", "off"), default=None)
    an.add_argument("--stratum-cache", default=None)
    return ap


def _load_input_file(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _gather(args) -> tuple:
    """Returns (f_exprs, label, mode_spec, options)."""
    file_options = {}
    label = args.label
    if args.input:
        if args.fx or args.fy or args.fz:
            raise ValueError("give either --input or --fx/--fy/--fz, not both")
        data = _load_input_file(args.input)
        f = data.get("f")
        if not (isinstance(f, list) and len(f) == 3):
            raise ValueError('input file needs "f": [fx, fy, fz]')
        f_exprs = [str(x) for x in f]
        if label is None:
            label = data.get("label")
        file_options = data.get("options", {}) or {}
    else:
        if not (args.fx and args.fy and args.fz):
            raise ValueError("need all of --fx, --fy, --fz (or --input)")
        f_exprs = [args.fx, args.fy, args.fz]

    def pick(cli_value, key, fallback):
        if cli_value is not None:
            return cli_value
        return file_options.get(key, fallback)

    mode_spec = args.mode if args.mode != "all" else file_options.get("mode", "all")
    oracle = pick(args.oracle, "oracle", "on")
    if isinstance(oracle, bool):
        oracle = "on" if oracle else "off"
    options = AnalysisOptions(
        precision_bits=int(pick(args.precision_bits, "precision_bits", 256)),
        cluster_tol=float(pick(args.cluster_tol, "cluster_tol", 1e-8)),
        stratum_cache=pick(args.stratum_cache, "stratum_cache", None),
        oracle=(oracle == "on"),
    )
    return f_exprs, label, mode_spec, options


def main(argv=None) -> int:
    ap = _build_argparser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE_EXIT if exc.code else 0

    try:
        f_exprs, label, mode_spec, options = _gather(args)
        modes = resolve_modes(mode_spec)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT

    try:
        curve = formparse.parse_curve(*f_exprs)
    except formparse.SyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except formparse.NotHomogeneous as exc:
        print(f"error: not homogeneous: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except CurveError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        if exc.code in _PARSE_ERROR_CODES:
            return USAGE_EXIT
        return IMPROPER_EXIT

    try:
        doc = build_document(curve, modes, options, f_exprs=f_exprs, label=label)
    except CurveError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return IMPROPER_EXIT
    except (AmbiguousCluster, PrecisionExhausted) as exc:
        # numeric stage could not certify; rerun without 'real' to report the rest
        reduced = [m for m in modes if m != "real"]
        if not reduced:
            print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
            return INCONCLUSIVE_EXIT
        doc = build_document(
            curve, reduced, options, f_exprs=f_exprs, label=label
        )
        doc["warnings"].append(
            {"code": "CLUSTER_AMBIGUOUS", "point": None, "detail": str(exc)}
        )
        sys.stdout.write(render(doc, args.format))
        return INCONCLUSIVE_EXIT
    except (
        InternalInconsistency,
        GlobalDeltaMismatch,
        NegativeCount,
        DivisibilityFailure,
        NotReduced,
    ) as exc:
        print(
            f"internal inconsistency ({type(exc).__name__}): {exc}",
            file=sys.stderr,
        )
        return INCONSISTENT_EXIT

    sys.stdout.write(render(doc, args.format))
    if any(w["code"] == "INCONCLUSIVE_A_TYPE" for w in doc["warnings"]):
        return INCONCLUSIVE_EXIT
    return 0


if __name__ == "__main__":
    sys.exit(main())
