"""Command-line front end for the first-digit law toolkit.

Four subcommands:

  theory    the three closed-form laws for a base, side by side
  sweep     exact frequency of a digit over {1..m} with its extremum map
  analyze   tally a dataset's leading digits and score candidate laws
  bounds    screen a distribution against the universal per-digit limits

Every command renders either a human table (default) or a single JSON
document (--output json) with the fixed key set command / base / params /
result / diagnostics / meta.  Everything outside meta is a deterministic
function of argv and the input bytes; meta carries tool version and
timing and is exempt from that guarantee.  Exact rationals appear as
num/den pairs next to their decimal value.

Exit codes: 0 success; 1 runtime failure (unreadable input, empty
sample, capacity overflow); 2 usage error; 3 bound violation under
`analyze --require-bounds`.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import __version__
from .digits import Base, Digit, as_base, as_digit
from .empirical import SampleSummary, empirical_fractions, merge, tally
from .errors import DigitLawError, DomainError, UsageError
from .fit import FitReport, compare
from .ingest import FORMATS, InputSpec, parse_dataset
from .lawtheory import (
    BoundsReport,
    DigitDistribution,
    LABEL_CUSTOM,
    arithmetic_mean_distribution,
    benford,
    bounds_check,
    exact_frequency,
    extremal_frequency,
    extremum_locations,
    geometric_mean_distribution,
    leading_digit_count,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BOUNDS = 3

_LAWS: dict[str, Callable[[Base], DigitDistribution]] = {
    "benford": benford,
    "geom": geometric_mean_distribution,
    "arith": arithmetic_mean_distribution,
}

_STDIN_LABEL = "<stdin>"


@dataclass(frozen=True)
class CommandOutcome:
    """Exit code plus the structured report the command produced."""

    exit_code: int
    report: dict | None


def main(argv: Sequence[str] | None = None) -> int:
    outcome = execute(sys.argv[1:] if argv is None else argv)
    return outcome.exit_code


def execute(argv: Sequence[str]) -> CommandOutcome:
    """Run one command line and emit its report to --out or stdout."""
    started = time.perf_counter()
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return CommandOutcome(code, None)

    report: dict = {
        "command": args.command,
        "base": args.base,
        "params": {},
        "result": None,
        "diagnostics": [],
        "meta": {},
    }
    try:
        handler = _HANDLERS[args.command]
        params, result, diagnostics, exit_code = handler(args)
        report["params"] = params
        report["result"] = result
        report["diagnostics"] = diagnostics
        report["meta"] = {
            "tool": "digitlaw",
            "version": __version__,
            "elapsed_s": time.perf_counter() - started,
        }
        if args.output == "json":
            text = json.dumps(report, indent=2, sort_keys=True) + "\n"
        else:
            text = _RENDERERS[args.command](report)
        _emit(text, args.out)
    except UsageError as exc:
        print(f"digitlaw: {exc}", file=sys.stderr)
        report["diagnostics"] = [{"message": str(exc)}]
        return CommandOutcome(EXIT_USAGE, report)
    except (DigitLawError, OSError, ArithmeticError) as exc:
        print(f"digitlaw: {exc}", file=sys.stderr)
        report["diagnostics"] = [{"message": str(exc)}]
        return CommandOutcome(EXIT_FAILURE, report)
    return CommandOutcome(exit_code, report)


# ---------------------------------------------------------------- parsing


def _base_flag(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"base must be an integer, got {text!r}")
    if not 2 <= value <= 36:
        raise argparse.ArgumentTypeError(f"base must be in 2..36, got {value}")
    return value


def _positive_flag(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--base", type=_base_flag, default=10, help="radix, 2..36 (default 10)"
    )
    common.add_argument(
        "--output",
        choices=("table", "json"),
        default="table",
        help="human table or machine JSON (default table)",
    )
    common.add_argument(
        "--out", default=None, metavar="PATH", help="write to PATH instead of stdout"
    )

    parser = argparse.ArgumentParser(
        prog="digitlaw",
        description="First significant digit analysis: exact law tables, "
        "frequency sweeps, and dataset conformance scoring.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser(
        "theory",
        parents=[common],
        help="print the benford / geom / arith first-digit laws",
    )

    sweep = sub.add_parser(
        "sweep",
        parents=[common],
        help="exact leading-digit frequency over {1..m} with extremum locations",
    )
    which = sweep.add_mutually_exclusive_group(required=True)
    which.add_argument("--digit", type=_positive_flag, help="single first digit")
    which.add_argument(
        "--all-digits", action="store_true", help="every digit of the base"
    )
    sweep.add_argument(
        "--m-max",
        type=_positive_flag,
        required=True,
        metavar="M",
        help="sweep upper limits m = 1..M",
    )

    analyze = sub.add_parser(
        "analyze",
        parents=[common],
        help="tally a dataset's leading digits and score candidate laws",
    )
    analyze.add_argument(
        "--input",
        action="append",
        metavar="PATH",
        help="input file (repeatable; default: standard input)",
    )
    analyze.add_argument("--format", choices=FORMATS, default="plain")
    analyze.add_argument(
        "--delimiter", default=",", help="field separator for --format delimited"
    )
    analyze.add_argument(
        "--column",
        type=_positive_flag,
        default=1,
        help="1-based column for --format delimited",
    )
    analyze.add_argument(
        "--candidates",
        default="benford,geom,arith",
        help="comma list from benford, geom, arith",
    )
    analyze.add_argument(
        "--require-bounds",
        action="store_true",
        help="exit 3 if the sample violates the per-digit probability limits",
    )

    bounds = sub.add_parser(
        "bounds",
        parents=[common],
        help="check a distribution against the per-digit probability limits",
    )
    source = bounds.add_mutually_exclusive_group(required=True)
    source.add_argument("--dist", choices=sorted(_LAWS))
    source.add_argument(
        "--probs", metavar="P1,P2,...", help="explicit probabilities, one per digit"
    )
    return parser


# ------------------------------------------------------------- handlers


def _handle_theory(args) -> tuple[dict, dict, list, int]:
    b = as_base(args.base)
    laws = [
        {"label": name, "probabilities": list(_LAWS[name](b).probabilities)}
        for name in ("benford", "geom", "arith")
    ]
    result = {"digits": list(range(1, b.value)), "laws": laws}
    return {}, result, [], EXIT_OK


def _sweep_digit(d: Digit, m_max: int) -> dict:
    points = []
    for m in range(1, m_max + 1):
        count = leading_digit_count(d, m, d.base)
        freq = exact_frequency(d, m, d.base)
        points.append(
            {
                "m": m,
                "count": count,
                "num": freq.numerator,
                "den": freq.denominator,
                "value": float(freq),
            }
        )
    minima = []
    maxima = []
    radix = d.base.value
    k = 1
    while radix >= 3 and d.value * radix**k - 1 <= m_max:
        for kind, location in zip(
            ("min", "max"), extremum_locations(d, k, d.base)[-1]
        ):
            if location <= m_max:
                extremum = extremal_frequency(d, k, kind, d.base)
                entry = {
                    "k": k,
                    "m": extremum.location_m,
                    "num": extremum.value.numerator,
                    "den": extremum.value.denominator,
                    "value": float(extremum.value),
                }
                (minima if kind == "min" else maxima).append(entry)
        k += 1
    return {"digit": d.value, "points": points, "minima": minima, "maxima": maxima}


def _handle_sweep(args) -> tuple[dict, dict, list, int]:
    b = as_base(args.base)
    if args.all_digits:
        digits = [Digit(n, b) for n in range(1, b.value)]
    else:
        try:
            digits = [as_digit(args.digit, b)]
        except DomainError as exc:
            raise UsageError(str(exc)) from None
    params = {
        "digit": None if args.all_digits else args.digit,
        "all_digits": bool(args.all_digits),
        "m_max": args.m_max,
    }
    result = {
        "m_max": args.m_max,
        "series": [_sweep_digit(d, args.m_max) for d in digits],
    }
    return params, result, [], EXIT_OK


def _parse_candidates(text: str) -> list[str]:
    names = [part.strip() for part in text.split(",") if part.strip()]
    if not names:
        raise UsageError("--candidates needs at least one name")
    unknown = [name for name in names if name not in _LAWS]
    if unknown:
        raise UsageError(
            f"unknown candidates {', '.join(sorted(unknown))}; "
            f"choose from {', '.join(sorted(_LAWS))}"
        )
    return names


def _read_inputs(args, spec: InputSpec, base: Base):
    summaries = []
    diagnostics: list[dict] = []
    paths = args.input if args.input else None
    if paths is None:
        sources = [(_STDIN_LABEL, sys.stdin)]
    else:
        sources = [(path, None) for path in paths]
    for label, stream in sources:
        if stream is None:
            with open(label, "r", encoding="utf-8", errors="replace") as handle:
                records, diags = parse_dataset(spec, handle)
        else:
            records, diags = parse_dataset(spec, stream)
        values = [
            (rec.value, rec.token if spec.decimal_token_capture else None)
            for rec in records
        ]
        summaries.append(tally(values, base, source=label))
        diagnostics.extend(
            {"source": label, "line": d.line, "message": d.message} for d in diags
        )
    return merge(summaries), diagnostics


def _fraction_doc(fr: Fraction) -> dict:
    return {"num": fr.numerator, "den": fr.denominator}


def _bounds_doc(report: BoundsReport) -> dict:
    return {
        "all_within": report.all_within,
        "entries": [
            {
                "digit": entry.digit,
                "lower": _fraction_doc(entry.lower),
                "probability": entry.probability,
                "upper": _fraction_doc(entry.upper),
                "within": entry.within,
            }
            for entry in report.entries
        ],
    }


def _sample_doc(summary: SampleSummary) -> dict:
    return {
        "source": summary.source,
        "counts": list(summary.counts),
        "total_read": summary.total_read,
        "used": summary.used,
        "skipped_zero": summary.skipped_zero,
        "skipped_nonfinite": summary.skipped_nonfinite,
    }


def _fit_doc(fit: FitReport) -> dict:
    return {
        "sample": _sample_doc(fit.sample),
        "empirical": {
            "probabilities": list(fit.empirical.probabilities),
            "fractions": [_fraction_doc(fr) for fr in empirical_fractions(fit.sample)],
        },
        "candidates": [
            {
                "label": entry.label,
                "r": entry.r,
                "chi_square": entry.chi_square,
                "chi_square_dof": entry.chi_square_dof,
                "mad": entry.mad,
                "max_abs_dev": entry.max_abs_dev,
            }
            for entry in fit.entries
        ],
        "best_by_r": fit.best_by_r,
        "bounds": _bounds_doc(fit.bounds),
    }


def _handle_analyze(args) -> tuple[dict, dict, list, int]:
    b = as_base(args.base)
    names = _parse_candidates(args.candidates)
    try:
        spec = InputSpec(
            format=args.format,
            delimiter=args.delimiter,
            column=args.column,
            decimal_token_capture=(b.value == 10),
        )
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    summary, diagnostics = _read_inputs(args, spec, b)
    fit = compare(summary, [_LAWS[name](b) for name in names])
    params = {
        "inputs": list(args.input) if args.input else [_STDIN_LABEL],
        "format": args.format,
        "delimiter": args.delimiter,
        "column": args.column,
        "candidates": names,
        "require_bounds": bool(args.require_bounds),
    }
    exit_code = EXIT_OK
    if args.require_bounds and not fit.bounds.all_within:
        exit_code = EXIT_BOUNDS
    return params, _fit_doc(fit), diagnostics, exit_code


def _handle_bounds(args) -> tuple[dict, dict, list, int]:
    b = as_base(args.base)
    if args.dist is not None:
        dist = _LAWS[args.dist](b)
    else:
        pieces = [part.strip() for part in args.probs.split(",") if part.strip()]
        if len(pieces) != b.value - 1:
            raise UsageError(
                f"--probs needs {b.value - 1} values for base {b.value}, "
                f"got {len(pieces)}"
            )
        try:
            probs = tuple(float(part) for part in pieces)
        except ValueError as exc:
            raise UsageError(f"--probs: {exc}") from None
        dist = DigitDistribution(b, probs, LABEL_CUSTOM)
    report = bounds_check(dist)
    params = {"dist": args.dist, "probs": None if args.probs is None else list(dist.probabilities)}
    result = {
        "label": dist.label,
        "probabilities": list(dist.probabilities),
        "bounds": _bounds_doc(report),
    }
    return params, result, [], EXIT_OK


_HANDLERS = {
    "theory": _handle_theory,
    "sweep": _handle_sweep,
    "analyze": _handle_analyze,
    "bounds": _handle_bounds,
}


# ------------------------------------------------------------- rendering


def _sig4(x: float) -> str:
    return format(x, "#.4g")


def _frac_text(num: int, den: int) -> str:
    return f"{num}/{den}"


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _render_theory(report: dict) -> str:
    result = report["result"]
    labels = [law["label"] for law in result["laws"]]
    lines = [f"first-digit laws, base {report['base']}"]
    header = "n".ljust(4) + "".join(label.ljust(12) for label in labels)
    lines.append(header.rstrip())
    for i, n in enumerate(result["digits"]):
        row = str(n).ljust(4)
        for law in result["laws"]:
            row += _sig4(law["probabilities"][i]).ljust(12)
        lines.append(row.rstrip())
    return "\n".join(lines) + "\n"


def _render_extrema(entries: list[dict], kind: str) -> list[str]:
    lines = [f"  {kind}:"]
    for e in entries:
        lines.append(
            f"    k={e['k']}  m={e['m']}  "
            f"{_frac_text(e['num'], e['den'])} = {_sig4(e['value'])}"
        )
    if not entries:
        lines.append("    (none in range)")
    return lines


def _render_sweep(report: dict) -> str:
    result = report["result"]
    lines = [
        f"leading-digit frequency over {{1..m}}, base {report['base']}, "
        f"m up to {result['m_max']}"
    ]
    many = len(result["series"]) > 1
    for series in result["series"]:
        lines.append(f"digit {series['digit']}:")
        lines.append("  " + "m".ljust(10) + "count".ljust(10) + "exact".ljust(16) + "value")
        for point in series["points"]:
            lines.append(
                "  "
                + str(point["m"]).ljust(10)
                + str(point["count"]).ljust(10)
                + _frac_text(point["num"], point["den"]).ljust(16)
                + _sig4(point["value"])
            )
        lines.extend(_render_extrema(series["minima"], "minima"))
        lines.extend(_render_extrema(series["maxima"], "maxima"))
        if many:
            lines.append("")
    return "\n".join(lines).rstrip("\n") + "\n"


def _render_bounds_block(doc: dict) -> list[str]:
    lines = [
        "  "
        + "n".ljust(4)
        + "lower".ljust(18)
        + "p".ljust(12)
        + "upper".ljust(18)
        + "within"
    ]
    for entry in doc["entries"]:
        lower = entry["lower"]
        upper = entry["upper"]
        lower_cell = (
            f"{_frac_text(lower['num'], lower['den'])} = "
            f"{_sig4(lower['num'] / lower['den'])}"
        )
        upper_cell = (
            f"{_frac_text(upper['num'], upper['den'])} = "
            f"{_sig4(upper['num'] / upper['den'])}"
        )
        lines.append(
            "  "
            + str(entry["digit"]).ljust(4)
            + lower_cell.ljust(18)
            + _sig4(entry["probability"]).ljust(12)
            + upper_cell.ljust(18)
            + ("yes" if entry["within"] else "NO")
        )
    verdict = "all digits within limits" if doc["all_within"] else "limit violations present"
    lines.append(f"  {verdict}")
    return lines


def _render_analyze(report: dict) -> str:
    result = report["result"]
    sample = result["sample"]
    lines = [
        f"sample {sample['source']}: read {sample['total_read']}, "
        f"used {sample['used']}, skipped {sample['skipped_zero']} zero "
        f"and {sample['skipped_nonfinite']} non-finite"
    ]
    lines.append("empirical first-digit frequencies:")
    lines.append("  " + "n".ljust(4) + "count".ljust(10) + "exact".ljust(16) + "p")
    for i, (count, fr) in enumerate(zip(sample["counts"], result["empirical"]["fractions"])):
        lines.append(
            "  "
            + str(i + 1).ljust(4)
            + str(count).ljust(10)
            + _frac_text(fr["num"], fr["den"]).ljust(16)
            + _sig4(result["empirical"]["probabilities"][i])
        )
    lines.append("candidates:")
    lines.append(
        "  "
        + "label".ljust(10)
        + "r".ljust(12)
        + "chi_square".ljust(14)
        + "dof".ljust(6)
        + "mad".ljust(12)
        + "max_abs_dev"
    )
    for entry in result["candidates"]:
        lines.append(
            "  "
            + entry["label"].ljust(10)
            + _sig4(entry["r"]).ljust(12)
            + _sig4(entry["chi_square"]).ljust(14)
            + str(entry["chi_square_dof"]).ljust(6)
            + _sig4(entry["mad"]).ljust(12)
            + _sig4(entry["max_abs_dev"])
        )
    lines.append(f"best by r: {result['best_by_r']}")
    lines.append("bound check of the sample:")
    lines.extend(_render_bounds_block(result["bounds"]))
    if report["diagnostics"]:
        lines.append(f"diagnostics ({len(report['diagnostics'])}):")
        for diag in report["diagnostics"]:
            lines.append(
                f"  {diag['source']} line {diag['line']}: {diag['message']}"
            )
    return "\n".join(lines) + "\n"


def _render_bounds(report: dict) -> str:
    result = report["result"]
    lines = [
        f"per-digit probability limits, base {report['base']}, "
        f"distribution {result['label']}"
    ]
    lines.extend(_render_bounds_block(result["bounds"]))
    return "\n".join(lines) + "\n"


_RENDERERS = {
    "theory": _render_theory,
    "sweep": _render_sweep,
    "analyze": _render_analyze,
    "bounds": _render_bounds,
}


if __name__ == "__main__":
    sys.exit(main())
