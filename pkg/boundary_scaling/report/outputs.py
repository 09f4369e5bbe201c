"""
Writing batch results to disk.

Files written into the output directory:
- runs.csv: one row per run, columns in REPORT_COLUMNS order
- runs.json: the run rows plus the batch statistics and failures
- collapse.csv: ln_y_plus, psi, run_label for every region I sample
- profile_<label>.svg: one log-log profile plot per run; repeated labels get
  _2, _3, ... suffixes in input order
- collapse.svg: psi against ln y+ with the bisectrix
- comparison.csv: model comparison table (written by write_comparison)

Floats are printed with 10 significant digits so identical inputs give
byte-identical files.
"""

from __future__ import annotations

import json
import logging
import re
from collections.abc import Callable, Iterable, Sequence
from enum import Enum
from pathlib import Path
from typing import Any

import pandas as pd

from boundary_scaling import visu
from boundary_scaling.exceptions import OutputWriteError
from boundary_scaling.report.analysis import REPORT_COLUMNS, BatchSummary
from boundary_scaling.report.compare import ModelComparison

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.10g"

RUNS_CSV = "runs.csv"
RUNS_JSON = "runs.json"
COLLAPSE_CSV = "collapse.csv"
COLLAPSE_SVG = "collapse.svg"
COMPARISON_CSV = "comparison.csv"

COLLAPSE_COLUMNS = ("ln_y_plus", "psi", "run_label")

_UNSAFE_CHARS = re.compile(r"[^A-Za-z0-9._-]+")


class OutputFormat(str, Enum):
    """Output kinds that emit_outputs can write."""

    TABLE_CSV = "table_csv"
    TABLE_JSON = "table_json"
    COLLAPSE_CSV = "collapse_csv"
    PROFILE_SVG = "profile_svg"
    COLLAPSE_SVG = "collapse_svg"


def parse_formats(values: Iterable[str]) -> set[OutputFormat]:
    """
    Parse format names, accepting comma-separated lists.

    Raises:
        ValueError: On an unknown format name.
    """
    formats: set[OutputFormat] = set()
    for value in values:
        for name in value.split(","):
            name = name.strip()
            if not name:
                continue
            try:
                formats.add(OutputFormat(name))
            except ValueError:
                choices = ", ".join(f.value for f in OutputFormat)
                raise ValueError(f"unknown output format {name!r}; choose from {choices}") from None
    return formats


def _round(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        return float(f"{value:.10g}")
    if isinstance(value, dict):
        return {k: _round(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round(v) for v in value]
    return value


def safe_label(label: str) -> str:
    """File-name-safe form of a run label."""
    return _UNSAFE_CHARS.sub("_", label).strip("_") or "run"


def _write(path: Path, writer: Callable[[Path], object]) -> Path:
    try:
        writer(path)
    except OSError as exc:
        raise OutputWriteError(str(path), exc) from exc
    logger.debug("wrote %s", path)
    return path


def _to_csv(frame: pd.DataFrame, path: Path) -> None:
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, na_rep="", lineterminator="\n")


def runs_frame(summary: BatchSummary) -> pd.DataFrame:
    """The run table as a DataFrame with the documented column order."""
    return pd.DataFrame([r.to_dict() for r in summary.reports], columns=list(REPORT_COLUMNS))


def collapse_frame(summary: BatchSummary) -> pd.DataFrame:
    """Every collapse point of the batch as (ln_y_plus, psi, run_label) rows."""
    rows = [
        (p.ln_y_plus, p.psi, p.run_label)
        for analysis in summary.analyses
        for p in analysis.collapse_points
    ]
    return pd.DataFrame(rows, columns=list(COLLAPSE_COLUMNS))


def summary_document(summary: BatchSummary) -> dict[str, Any]:
    """JSON-ready document of a batch; run rows use the RunReport field names."""
    return _round(
        {
            "runs": [r.to_dict() for r in summary.reports],
            "beta_vs_lnre": summary.beta_vs_lnre.to_dict(),
            "collapse_stats_by_band": {
                band: None if stats is None else stats.to_dict()
                for band, stats in summary.collapse_stats_by_band.items()
            },
            "closeness": None if summary.closeness is None else summary.closeness.to_dict(),
            "failures": [f.to_dict() for f in summary.failures],
        }
    )


def _write_json(document: dict[str, Any], path: Path) -> None:
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        json.dump(document, fh, indent=2, allow_nan=False)
        fh.write("\n")


def emit_outputs(
    summary: BatchSummary,
    out_dir: str | Path,
    formats: Iterable[OutputFormat | str],
) -> list[Path]:
    """
    Write the requested outputs of a batch.

    Args:
        summary: The batch result.
        out_dir: Output directory, created if missing.
        formats: Output kinds; an empty collection writes nothing.

    Returns:
        Paths written, in a fixed order.

    Raises:
        OutputWriteError: Naming the file that could not be written.
        RuntimeError: If an SVG is requested and matplotlib is unavailable.
    """
    wanted = {OutputFormat(f) for f in formats}
    if not wanted:
        return []
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OutputWriteError(str(out), exc) from exc

    written: list[Path] = []
    if OutputFormat.TABLE_CSV in wanted:
        written.append(_write(out / RUNS_CSV, lambda p: _to_csv(runs_frame(summary), p)))
    if OutputFormat.TABLE_JSON in wanted:
        written.append(_write(out / RUNS_JSON, lambda p: _write_json(summary_document(summary), p)))
    if OutputFormat.COLLAPSE_CSV in wanted:
        written.append(_write(out / COLLAPSE_CSV, lambda p: _to_csv(collapse_frame(summary), p)))
    if OutputFormat.PROFILE_SVG in wanted:
        stems = visu.unique_names(safe_label(a.label) for a in summary.analyses)
        for stem, analysis in zip(stems, summary.analyses):
            plot = visu.profile_plot(
                analysis.profile, analysis.segmented, summary.config.reference_y_plus
            )
            path = out / f"profile_{stem}.svg"
            written.append(_write(path, lambda p, plot=plot: visu.savefig(plot, p)))
    if OutputFormat.COLLAPSE_SVG in wanted and summary.analyses:
        plot = visu.collapse_plot([(a.label, a.collapse_points) for a in summary.analyses])
        written.append(_write(out / COLLAPSE_SVG, lambda p: visu.savefig(plot, p)))
    logger.info("wrote %d files to %s", len(written), out)
    return written


def write_comparison(comparisons: Sequence[ModelComparison], path: str | Path) -> Path:
    """Write the model comparison table as CSV."""
    frame = pd.DataFrame([c.to_dict() for c in comparisons])

    def writer(p: Path) -> None:
        p.parent.mkdir(parents=True, exist_ok=True)
        _to_csv(frame, p)

    return _write(Path(path), writer)
