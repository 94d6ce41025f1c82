"""Command line: validate farm files, assess crops, compare the pair,
sweep the marginal share.

Exit codes: 0 on success, 1 for domain errors (validation failures, unknown
crops, missing factor records, divergent seed chains), 2 for syntax and
usage problems (unreadable files, grammar errors, bad flags).
"""

from __future__ import annotations

import argparse
import sys

from .assess import (assess_crop, compare_pair, resolve_factors_path,
                     sweep_shares)
from .factors import FactorFileError, MissingFlowError, load_factor_db
from .farmspec import FarmValidationError, build_farm_model, \
    parse_farm_document
from .inventory import InventoryError
from .reports import build_manifest, write_assessment, write_comparison, \
    write_sweep
from .sections import SectionSyntaxError, parse_document
from .units import UnitError

__all__ = ["main"]

_VERSION = "1.0.0"

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INPUT = 2


class _InputError(Exception):
    pass


def _read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from exc


def _load_model(path: str):
    return parse_farm_document(_read_text(path))


def _load_db(path: str):
    return load_factor_db(_read_text(path))


def _parse_share(text: str) -> float:
    try:
        if "/" in text:
            numerator, denominator = text.split("/", 1)
            return float(numerator) / float(denominator)
        return float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _InputError(f"bad share {text!r}") from exc


def _sweep_points(args) -> list[float]:
    if args.shares is not None:
        shares = [_parse_share(part) for part in args.shares.split(",") if part]
        if not shares:
            raise _InputError("--shares produced no shares")
        return shares
    start_stop_step = args.range.split(":")
    if len(start_stop_step) != 3:
        raise _InputError("--range takes start:stop:step")
    start, stop, step = (_parse_share(part) for part in start_stop_step)
    if step <= 0:
        raise _InputError("--range step must be positive")
    shares = []
    value = start
    while value <= stop + 1e-12:
        shares.append(round(value, 12))
        value += step
    if not shares:
        raise _InputError("--range produced no shares")
    return shares


# ---------------------------------------------------------------------- #
#  subcommands
# ---------------------------------------------------------------------- #

def _cmd_validate(args) -> int:
    text = _read_text(args.farm)
    doc = parse_document(text)  # SectionSyntaxError -> exit 2
    model, report = build_farm_model(doc)
    for diagnostic in report.diagnostics:
        print(diagnostic.render())
    if model is None or not report.ok:
        print(f"invalid: {len(report.errors)} error(s)")
        return EXIT_DOMAIN
    print(f"ok: {len(model.crops)} crops on {model.total_area_ha:g} ha")
    return EXIT_OK


def _flags(args, **extra) -> dict:
    flags = {"command": args.command, "format": args.format,
             "cutoff_missing": getattr(args, "cutoff_missing", False)}
    if getattr(args, "horizon", None) is not None:
        flags["horizon"] = args.horizon
    flags.update(extra)
    return flags


def _cmd_assess(args) -> int:
    model = _load_model(args.farm)
    factors_path = resolve_factors_path(args.farm, model, args.factors)
    db = _load_db(factors_path)
    crops = args.crop or []
    if len(crops) != 1:
        raise _InputError("assess needs exactly one --crop")
    result = assess_crop(model, db, crops[0],
                         cutoff_missing=args.cutoff_missing,
                         horizon_years=args.horizon)
    manifest = build_manifest(args.farm, factors_path,
                              _flags(args, crop=crops[0]))
    for path in write_assessment(result, manifest, args.out, args.format):
        print(path)
    for note in result.notes:
        print(f"note: {note}", file=sys.stderr)
    return EXIT_OK


def _cmd_compare(args) -> int:
    model = _load_model(args.farm)
    factors_path = resolve_factors_path(args.farm, model, args.factors)
    db = _load_db(factors_path)
    crops = args.crop or []
    if len(crops) not in (0, 2):
        raise _InputError("compare takes no --crop (the farm's pair) or two")
    first, second = crops if crops else model.marginal_pair
    comparison = compare_pair(model, db, first, second,
                              cutoff_missing=args.cutoff_missing,
                              horizon_years=args.horizon)
    manifest = build_manifest(args.farm, factors_path,
                              _flags(args, crops=f"{first},{second}"))
    for path in write_comparison(comparison, manifest, args.out, args.format):
        print(path)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    model = _load_model(args.farm)
    shares = _sweep_points(args)
    points = sweep_shares(model, shares)
    manifest = build_manifest(args.farm, None, _flags(
        args, shares=",".join(f"{share:.6f}" for share in shares)))
    paths = write_sweep(points, model.marginal_pair, manifest, args.out,
                        args.format)
    for path in paths:
        print(path)
    return EXIT_OK


# ---------------------------------------------------------------------- #
#  argument parsing and dispatch
# ---------------------------------------------------------------------- #

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cropgate",
        description="Cradle-to-farm-gate economics, carbon footprint and "
                    "primary energy accounting for crop alternatives.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(cmd, factors=True):
        cmd.add_argument("--farm", required=True, help="farm description file")
        if factors:
            cmd.add_argument("--factors",
                             help="characterization factor file (default: the "
                                  "farm's own 'factors' reference)")
            cmd.add_argument("--crop", action="append",
                             help="crop name (repeatable where two are valid)")
            cmd.add_argument("--cutoff-missing", action="store_true",
                             dest="cutoff_missing",
                             help="missing factor records count zero instead "
                                  "of failing")
            cmd.add_argument("--horizon", type=int,
                             help="amortization horizon in years")
        cmd.add_argument("--out", default=".", help="output directory")
        cmd.add_argument("--format", choices=("csv", "json"), default="csv",
                         help="csv writes tables plus JSON; json only JSON")

    validate = sub.add_parser("validate", help="parse and validate a farm file")
    validate.add_argument("--farm", required=True)

    assess = sub.add_parser("assess", help="full report for one crop")
    common(assess)

    compare = sub.add_parser("compare",
                             help="side-by-side report for two crops")
    common(compare)

    sweep = sub.add_parser("sweep",
                           help="farm income difference vs marginal share")
    sweep_shares_group = sweep.add_mutually_exclusive_group(required=True)
    sweep_shares_group.add_argument("--shares",
                                    help="comma-separated marginal shares "
                                         "(plain numbers or a/b fractions)")
    sweep_shares_group.add_argument("--range",
                                    help="start:stop:step share range")
    common(sweep, factors=False)

    return parser


_HANDLERS = {
    "validate": _cmd_validate,
    "assess": _cmd_assess,
    "compare": _cmd_compare,
    "sweep": _cmd_sweep,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SectionSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FarmValidationError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_DOMAIN
    except (FactorFileError, MissingFlowError, InventoryError, UnitError,
            KeyError, ValueError) as exc:
        if type(exc) is KeyError and exc.args:
            message = exc.args[0]  # plain KeyError str() adds quotes
        else:
            message = exc
        print(f"error: {message}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
