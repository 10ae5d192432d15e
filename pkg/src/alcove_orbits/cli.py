"""Command-line interface: ``alcove-orbits {classes,report,oracle,svg}``.

Exit status is 0 on success, 1 when an internal invariant or oracle check
fails, 2 on usage errors (bad flags, invalid type, exceeded budget).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from alcove_orbits import __version__
from alcove_orbits.cartan import build_datum
from alcove_orbits.config import DEFAULT_BUDGETS, AlcoveOrbitsError, BudgetExceeded, InvalidDatumError
from alcove_orbits.report import (
    DecompositionReport,
    ReportError,
    build_classes_report,
    build_report,
    run_oracle,
)
from alcove_orbits.svg import PlanarityError, emit_svg

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

DEFAULTS: dict[str, Any] = {
    "type": "A",
    "rank": 2,
    "radius": 4,
    "conjugator_radius": None,  # 2 * radius + 4
    "json": None,
    "svg": None,
    "class": 1,
    "budget": DEFAULT_BUDGETS.ball,
    "workers": 1,
}


class UsageError(Exception):
    pass


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", metavar="PATH", help="JSON file with flag values; flags on the command line win")
    p.add_argument("--type", dest="type", help=f"root system type A-G (default: {DEFAULTS['type']})")
    p.add_argument("--rank", type=int, help=f"rank (default: {DEFAULTS['rank']})")
    p.add_argument("--budget", type=int, metavar="N", help=f"max Cayley ball size (default: {DEFAULTS['budget']})")
    p.add_argument("--json", metavar="PATH", help="write JSON here (default: stdout for report, none otherwise)")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alcove-orbits",
        description="Involution classes of affine Weyl groups and centralizer orbits on alcoves.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classes", help="table of involution classes")
    _add_common(p)

    p = sub.add_parser("report", help="classes plus per-class orbit censuses for radii 0..R")
    _add_common(p)
    p.add_argument("--radius", type=int, help=f"ball radius R (default: {DEFAULTS['radius']})")
    p.add_argument("--workers", type=int, help=f"processes for the census (default: {DEFAULTS['workers']})")
    p.add_argument("--svg", metavar="PATH", help="also write an SVG for --class (rank <= 2)")
    p.add_argument("--class", dest="class", type=int, metavar="INDEX", help=f"class for --svg (default: {DEFAULTS['class']})")

    p = sub.add_parser("oracle", help="compare exact results with brute-force conjugation")
    _add_common(p)
    p.add_argument("--radius", type=int, help=f"ball radius R (default: {DEFAULTS['radius']})")
    p.add_argument("--conjugator-radius", dest="conjugator_radius", type=int, help="conjugator ball radius (default: 2R+4)")

    p = sub.add_parser("svg", help="draw the alcove ball coloured by orbit (rank <= 2)")
    _add_common(p)
    p.add_argument("--radius", type=int, help=f"ball radius R (default: {DEFAULTS['radius']})")
    p.add_argument("--svg", metavar="PATH", help="output file (required)")
    p.add_argument("--class", dest="class", type=int, metavar="INDEX", help=f"class to colour by (default: {DEFAULTS['class']})")
    return parser


def resolve(args: argparse.Namespace) -> dict[str, Any]:
    """Merge defaults < config file < command-line flags."""
    opts = dict(DEFAULTS)
    if args.config:
        try:
            cfg = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(cfg, dict):
            raise UsageError("config file must hold a JSON object")
        for key, value in cfg.items():
            key = key.replace("-", "_")
            if key not in DEFAULTS:
                raise UsageError(f"unknown config key {key!r}")
            opts[key] = value
    for key in DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            opts[key] = value
    for key in ("rank", "radius", "budget", "workers", "class"):
        if not isinstance(opts[key], int) or isinstance(opts[key], bool):
            raise UsageError(f"--{key} must be an integer")
    if opts["radius"] < 0:
        raise UsageError("--radius must be non-negative")
    if opts["budget"] < 1 or opts["workers"] < 1:
        raise UsageError("--budget and --workers must be positive")
    if opts["conjugator_radius"] is None:
        opts["conjugator_radius"] = 2 * opts["radius"] + 4
    if opts["conjugator_radius"] < 0:
        raise UsageError("--conjugator-radius must be non-negative")
    return opts


def _write_json(payload: str, dest: str | None) -> None:
    if dest is None or dest == "-":
        sys.stdout.write(payload)
    else:
        Path(dest).write_text(payload)


def cmd_classes(opts: dict[str, Any]) -> int:
    datum = build_datum(opts["type"], opts["rank"])
    report = build_classes_report(datum, opts["budget"])
    print(f"{datum.name}: {len(report.classes)} conjugacy classes of elements of order dividing 2")
    print(f"{'idx':>3}  {'finite word':<20} {'lambda':<14} {'sigma word':<28} divisors")
    for c in report.classes:
        print(
            f"{c.index:>3}  {str(c.finite_word):<20} {str(c.lambda_rep):<14} "
            f"{str(c.sigma_word):<28} {c.elementary_divisors}"
        )
    if opts["json"]:
        d = report.to_dict()
        d["totals"] = []
        for c in d["classes"]:
            del c["census"]
        _write_json(json.dumps(d, indent=2) + "\n", opts["json"])
    return EXIT_OK


def cmd_report(opts: dict[str, Any]) -> int:
    datum = build_datum(opts["type"], opts["rank"])
    report = build_report(datum, opts["radius"], opts["budget"], opts["workers"])
    _write_json(report.to_json(), opts["json"])
    if opts["svg"]:
        emit_svg(report, opts["svg"], opts["class"])
    if opts["json"] not in (None, "-"):
        counts = report.totals[-1].orbit_counts
        print(f"{datum.name} R={opts['radius']}: ball size {report.totals[-1].ball_size}, orbit counts {counts}")
    return EXIT_OK


def cmd_oracle(opts: dict[str, Any]) -> int:
    datum = build_datum(opts["type"], opts["rank"])
    summary = run_oracle(datum, opts["radius"], opts["conjugator_radius"], opts["budget"])
    print(f"{datum.name} R={summary.radius} conjugator radius={summary.conjugator_radius}")
    for line in summary.lines:
        note = {"equal": "PASS", "refinement": "PASS (refinement only)", "violation": "FAIL"}[line.status]
        msg = f"  {line.subject:<22} exact={line.exact:<5} brute={line.brute:<5} {note}"
        if line.witness:
            msg += f"  witness: {line.witness}"
        print(msg)
    if opts["json"]:
        _write_json(json.dumps(summary.to_dict(), indent=2) + "\n", opts["json"])
    print("all checks passed" if summary.ok else "oracle violation")
    return EXIT_OK if summary.ok else EXIT_VIOLATION


def cmd_svg(opts: dict[str, Any]) -> int:
    if not opts["svg"]:
        raise UsageError("svg needs --svg PATH")
    datum = build_datum(opts["type"], opts["rank"])
    if datum.rank > 2:
        raise PlanarityError(f"SVG output needs rank <= 2; {datum.name} has rank {datum.rank}")
    report = build_report(datum, opts["radius"], opts["budget"])
    emit_svg(report, opts["svg"], opts["class"])
    if opts["json"]:
        _write_json(report.to_json(), opts["json"])
    return EXIT_OK


COMMANDS = {"classes": cmd_classes, "report": cmd_report, "oracle": cmd_oracle, "svg": cmd_svg}


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        opts = resolve(args)
        return COMMANDS[args.command](opts)
    except (UsageError, InvalidDatumError, PlanarityError, BudgetExceeded) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ReportError, AssertionError) as exc:
        print(f"{parser.prog} {args.command}: internal violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except AlcoveOrbitsError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
