"""
Command line interface.

Subcommands:
- analyze: profile files -> run table, JSON summary and plots
- generate: synthetic profile -> canonical profile file
- collapse: profile files -> psi dataset and collapse plot
- compare: profile files -> power law against log law table

Exit codes: 0 when every run succeeds, 2 when some runs fail, 1 when all
runs fail or the invocation is invalid.

Example:
    boundary-scaling generate --ln-re 10 --seed 3 -o run01.txt
    boundary-scaling analyze run01.txt --out-dir results --format table_csv,profile_svg
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from dataclasses import replace
from pathlib import Path
from typing import NoReturn

from boundary_scaling import __version__
from boundary_scaling.exceptions import BoundaryScalingError, OutputWriteError
from boundary_scaling.ingest import ProfileFormat, format_profile, write_profile_file
from boundary_scaling.profiles import RunMetadata
from boundary_scaling.report.analysis import (
    EXIT_OK,
    EXIT_TOTAL_FAILURE,
    AnalysisConfig,
    BatchSummary,
    analyze_batch,
    summarize,
)
from boundary_scaling.report.compare import compare_batch
from boundary_scaling.report.outputs import (
    COMPARISON_CSV,
    OutputFormat,
    emit_outputs,
    parse_formats,
    runs_frame,
    write_comparison,
)
from boundary_scaling.synthetic import (
    DEFAULT_NOISE_PCT,
    GeneratorSpec,
    GridSpec,
    LogLawModel,
    Model,
    ScalingLawModel,
    TwoSegmentModel,
    default_metadata,
    generate,
)

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

_SUMMARY_COLUMNS = [
    "label",
    "re_theta",
    "alpha",
    "beta",
    "ln_re1",
    "ln_re2",
    "discrepancy_pct",
    "breakpoint_y_plus",
]


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with status 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_TOTAL_FAILURE, f"{self.prog}: error: {message}\n")


def _range(text: str) -> tuple[float, float | None]:
    lo_text, sep, hi_text = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")
    try:
        lo = float(lo_text)
        hi = float(hi_text) if hi_text.strip() else None
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected numbers in LO:HI, got {text!r}") from None
    return lo, hi


def _key_value(text: str) -> tuple[str, str]:
    key, sep, value = text.partition("=")
    if not sep or not key.strip():
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    return key.strip(), value.strip()


def _add_logging_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="more output (-v info, -vv debug)"
    )
    parser.add_argument("-q", "--quiet", action="store_true", help="errors only")


def _add_analysis_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("files", nargs="+", type=Path, help="profile files")
    parser.add_argument(
        "--input-format",
        choices=[f.value for f in ProfileFormat],
        default=ProfileFormat.CANONICAL.value,
        help="profile file format (default: canonical)",
    )
    parser.add_argument(
        "--metadata",
        action="append",
        type=_key_value,
        default=[],
        metavar="KEY=VALUE",
        help="run metadata for headerless tables, or header overrides (repeatable)",
    )
    parser.add_argument(
        "--sublayer-cutoff", type=float, default=100.0, help="smallest y+ used in fits (default: 100)"
    )
    parser.add_argument(
        "--breakpoint-range",
        type=_range,
        default=(150.0, None),
        metavar="LO:HI",
        help="breakpoint search range in y+ (default: 150:, HI defaults to half the outermost y+)",
    )
    parser.add_argument(
        "--closeness-threshold-pct",
        type=float,
        default=3.0,
        help="largest ln Re discrepancy counted as close (default: 3)",
    )
    parser.add_argument(
        "--re-theta-split",
        type=float,
        default=15000.0,
        help="Re_theta separating the collapse bands (default: 15000)",
    )
    parser.add_argument("--out-dir", type=Path, default=Path("."), help="output directory")
    parser.add_argument("--workers", type=int, default=None, help="analysis threads")
    _add_logging_options(parser)


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser."""
    parser = _ArgumentParser(
        prog="boundary-scaling",
        description="Scaling-law analysis of turbulent boundary-layer velocity profiles.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="analyse profile files")
    _add_analysis_options(analyze)
    analyze.add_argument(
        "--format",
        action="append",
        default=None,
        help="output formats, comma separated or repeated "
        "(table_csv, table_json, collapse_csv, profile_svg, collapse_svg; default: table_csv,table_json)",
    )

    collapse = sub.add_parser("collapse", help="psi dataset and collapse plot")
    _add_analysis_options(collapse)
    collapse.add_argument(
        "--re-theta-min",
        type=float,
        default=None,
        help="only runs with Re_theta above this value; exits 0 when none qualify",
    )
    collapse.add_argument(
        "--format",
        action="append",
        default=None,
        help="output formats (default: collapse_csv,collapse_svg)",
    )

    compare = sub.add_parser("compare", help="power law against log law over region I")
    _add_analysis_options(compare)

    gen = sub.add_parser("generate", help="write a synthetic profile")
    gen.add_argument(
        "--model",
        choices=["scaling_law", "log_law", "two_segment"],
        default="scaling_law",
        help="generating law (default: scaling_law)",
    )
    gen.add_argument("--ln-re", type=float, default=None, help="ln Re of the scaling law")
    gen.add_argument("--kappa", type=float, default=None, help="log-law kappa")
    gen.add_argument("--b", type=float, default=None, help="log-law B")
    gen.add_argument("--a", type=float, default=None, help="two-segment inner amplitude")
    gen.add_argument("--alpha", type=float, default=None, help="two-segment inner exponent")
    gen.add_argument("--beta", type=float, default=None, help="two-segment outer exponent")
    gen.add_argument("--breakpoint", type=float, default=None, help="two-segment breakpoint y+")
    gen.add_argument(
        "--y-plus-range", type=_range, default=(100.0, 5000.0), metavar="LO:HI", help="grid range"
    )
    gen.add_argument("--count", type=int, default=40, help="grid points (default: 40)")
    gen.add_argument(
        "--noise-pct",
        type=float,
        default=DEFAULT_NOISE_PCT,
        help=f"multiplicative noise in percent (default: {DEFAULT_NOISE_PCT:g})",
    )
    gen.add_argument("--seed", type=int, default=0, help="generator seed (default: 0)")
    gen.add_argument(
        "--metadata",
        action="append",
        type=_key_value,
        default=[],
        metavar="KEY=VALUE",
        help="run metadata (re_theta, u_free, u_tau, nu, label, momentum_thickness)",
    )
    gen.add_argument("-o", "--output", type=Path, default=None, help="output file (default: stdout)")
    _add_logging_options(gen)
    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    if args.quiet:
        level = logging.ERROR
    elif args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT)


def config_from_args(args: argparse.Namespace) -> AnalysisConfig:
    """Map command-line options onto an AnalysisConfig."""
    return AnalysisConfig(
        sublayer_cutoff=args.sublayer_cutoff,
        breakpoint_range=args.breakpoint_range,
        closeness_threshold_pct=args.closeness_threshold_pct,
        re_theta_split=args.re_theta_split,
        max_workers=args.workers,
        input_format=ProfileFormat(args.input_format),
        metadata=dict(args.metadata),
    )


def _require(args: argparse.Namespace, model: str, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise ValueError(f"model {model} requires {', '.join(missing)}")


def model_from_args(args: argparse.Namespace) -> Model:
    """Build the generating model selected on the command line."""
    if args.model == "scaling_law":
        _require(args, args.model, "ln_re")
        return ScalingLawModel(ln_re=args.ln_re)
    if args.model == "log_law":
        _require(args, args.model, "kappa", "b")
        return LogLawModel(kappa=args.kappa, b=args.b)
    _require(args, args.model, "breakpoint")
    if args.ln_re is not None and None in (args.a, args.alpha, args.beta):
        return TwoSegmentModel.from_reynolds(args.ln_re, args.breakpoint)
    _require(args, args.model, "a", "alpha", "beta")
    return TwoSegmentModel(a=args.a, alpha=args.alpha, breakpoint=args.breakpoint, beta=args.beta)


def _meta_from_args(pairs: Sequence[tuple[str, str]]) -> RunMetadata:
    meta = default_metadata()
    overrides: dict[str, object] = {}
    for key, value in pairs:
        if key == "label":
            overrides[key] = value
        elif key in ("re_theta", "u_free", "u_tau", "nu", "momentum_thickness"):
            overrides[key] = float(value)
        else:
            raise ValueError(f"unknown metadata key {key!r}")
    return replace(meta, **overrides)


def _run_generate(args: argparse.Namespace) -> int:
    lo, hi = args.y_plus_range
    if hi is None:
        raise ValueError("--y-plus-range needs an upper bound")
    spec = GeneratorSpec(
        model=model_from_args(args),
        grid=GridSpec(y_plus_lo=lo, y_plus_hi=hi, count=args.count),
        noise_pct=args.noise_pct,
        seed=args.seed,
        meta=_meta_from_args(args.metadata),
    )
    profile = generate(spec)
    if args.output is None:
        sys.stdout.write(format_profile(profile))
    else:
        write_profile_file(profile, args.output)
        logger.info("wrote %s (%d points)", args.output, len(profile))
    return EXIT_OK


def _print_runs(summary: BatchSummary) -> None:
    if summary.reports:
        frame = runs_frame(summary)[_SUMMARY_COLUMNS]
        print(frame.to_string(index=False, float_format=lambda x: f"{x:.6g}"))
    for failure in summary.failures:
        print(f"FAILED {failure.source} ({failure.stage}): {failure.message}", file=sys.stderr)


def _formats(values: list[str] | None, default: str) -> set[OutputFormat]:
    return parse_formats(values if values else [default])


def _run_analyze(args: argparse.Namespace) -> int:
    formats = _formats(args.format, "table_csv,table_json")
    summary = analyze_batch(args.files, config_from_args(args))
    _print_runs(summary)
    beta = summary.beta_vs_lnre
    if beta.ok:
        logger.info("beta = %.4g / ln Re + %.4g (%d runs)", beta.slope, beta.intercept, beta.n_runs)
    else:
        logger.info("beta correlation: %s", beta.status)
    emit_outputs(summary, args.out_dir, formats)
    return summary.exit_code


def _run_collapse(args: argparse.Namespace) -> int:
    formats = _formats(args.format, "collapse_csv,collapse_svg")
    summary = analyze_batch(args.files, config_from_args(args))
    if args.re_theta_min is not None:
        kept = [a for a in summary.analyses if a.profile.meta.re_theta > args.re_theta_min]
        summary = summarize([*kept, *summary.failures], summary.config)
        if not kept and not summary.failures:
            print(f"no runs above re_theta {args.re_theta_min:g}")
            emit_outputs(summary, args.out_dir, formats)
            return EXIT_OK
    for band, stats in summary.collapse_stats_by_band.items():
        if stats is None:
            print(f"{band}: no runs")
        else:
            print(
                f"{band}: mean offset {stats.mean_offset:.4g}, rms {stats.rms:.4g}, "
                f"max |dev| {stats.max_abs:.4g} ({stats.n_points} points)"
            )
    emit_outputs(summary, args.out_dir, formats)
    return summary.exit_code


def _run_compare(args: argparse.Namespace) -> int:
    summary = analyze_batch(args.files, config_from_args(args))
    comparisons = compare_batch(summary.analyses)
    for c in comparisons:
        print(
            f"{c.label}: preferred {c.preferred} (rms power {c.rms_power:.4g}, "
            f"rms log {c.rms_loglaw:.4g}, kappa {c.kappa_fit:.4g}, B {c.b_fit:.4g})"
        )
    if comparisons:
        write_comparison(comparisons, args.out_dir / COMPARISON_CSV)
    return summary.exit_code


_COMMANDS = {
    "analyze": _run_analyze,
    "collapse": _run_collapse,
    "compare": _run_compare,
    "generate": _run_generate,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args)
    try:
        return _COMMANDS[args.command](args)
    except OutputWriteError as exc:
        logger.error("%s", exc)
        return EXIT_TOTAL_FAILURE
    except (BoundaryScalingError, ValueError) as exc:
        parser.error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
