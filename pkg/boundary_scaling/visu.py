"""
Static SVG figures for velocity profiles and the universal collapse.

Requires matplotlib for rendering. Install with:
    pip install matplotlib

Basic usage:
    >>> from boundary_scaling import visu
    >>> if visu.is_visu_enabled():
    ...     plot = visu.profile_plot(profile, segmented)
    ...     visu.savefig(plot, "profile_run01.svg")

The figures are:
- Profile plot: lg y+ against lg U+ with the data, both fitted segments, a
  vertical line at the breakpoint and a vertical reference line at y+ = 200
- Collapse plot: psi against ln y+ for one or more runs with the bisectrix

Every plotted series carries an SVG ``id`` (its ``gid``) so that emitted
files can be inspected: ``data``, ``region1``, ``region2``, ``breakpoint``,
``reference``, ``bisectrix`` and ``collapse-<label>``. Output is
byte-reproducible: no date is embedded and SVG ids use a fixed hash salt.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Any

import numpy as np

from boundary_scaling.profiles import evaluate_power_law

if TYPE_CHECKING:
    from boundary_scaling.diagnostics import CollapsePoint
    from boundary_scaling.profiles import SegmentedFit, VelocityProfile

# Check if matplotlib is available
_MATPLOTLIB_AVAILABLE = False
try:
    from matplotlib import rc_context
    from matplotlib.figure import Figure

    _MATPLOTLIB_AVAILABLE = True
except ImportError:
    rc_context = None
    Figure = None


# =============================================================================
# COLOR PALETTE
# =============================================================================

DEFAULT_COLORS = [
    "#4E79A7",  # Blue
    "#F28E2B",  # Orange
    "#E15759",  # Red
    "#76B7B2",  # Teal
    "#59A14F",  # Green
    "#EDC948",  # Yellow
    "#B07AA1",  # Purple
    "#FF9DA7",  # Pink
    "#9C755F",  # Brown
    "#BAB0AC",  # Gray
]

REFERENCE_COLOR = "#555555"

_SVG_RC = {
    "svg.hashsalt": "boundary-scaling",
    "svg.fonttype": "none",
    "path.simplify": False,
}


def _get_color(color: int | str | None, default_index: int = 0) -> str:
    """
    Get a color string from a color specification.

    Args:
        color: Integer palette index, color name/hex string, or None for auto.
        default_index: Palette index used when color is None.
    """
    if color is None:
        color = default_index
    if isinstance(color, int):
        return DEFAULT_COLORS[color % len(DEFAULT_COLORS)]
    return str(color)


# =============================================================================
# DATA CLASSES
# =============================================================================


@dataclass
class LineData:
    """
    A polyline, drawn with or without markers.

    Attributes:
        x: Abscissae in data coordinates.
        y: Ordinates in data coordinates.
        gid: SVG id of the drawn series.
        label: Legend label.
        color: Color specification (index or string).
        style: "solid", "dashed", "dotted" or "markers" (no connecting line).
    """

    x: Sequence[float]
    y: Sequence[float]
    gid: str
    label: str | None = None
    color: int | str | None = None
    style: str = "solid"


@dataclass
class AnnotationData:
    """
    A vertical reference line.

    Attributes:
        x: Position in data coordinates.
        gid: SVG id of the line.
        label: Text placed above the axes.
        color: Line color.
        style: Line style ("solid", "dashed", "dotted").
    """

    x: float
    gid: str
    label: str | None = None
    color: int | str = REFERENCE_COLOR
    style: str = "dashed"


@dataclass
class Plot:
    """
    A single-axes figure.

    Attributes:
        title: Figure title.
        xlabel: Axis label.
        ylabel: Axis label.
        log_axes: Draw both axes on log10 scales.
        lines: Plotted series in drawing order.
        annotations: Vertical reference lines.
    """

    title: str
    xlabel: str
    ylabel: str
    log_axes: bool = False
    lines: list[LineData] = field(default_factory=list)
    annotations: list[AnnotationData] = field(default_factory=list)


def is_visu_enabled() -> bool:
    """
    Check if visualization is available.

    Returns True if matplotlib is installed and can be used.
    """
    return _MATPLOTLIB_AVAILABLE


# =============================================================================
# FIGURE BUILDERS
# =============================================================================


def profile_plot(
    profile: VelocityProfile,
    segmented: SegmentedFit,
    reference_y_plus: float = 200.0,
) -> Plot:
    """
    Build the lg-lg profile figure of one run.

    Args:
        profile: The measured (or synthetic) profile.
        segmented: Its broken-line fit.
        reference_y_plus: Position of the vertical reference line.
    """
    plot = Plot(
        title=f"{profile.label}  (Re_theta = {profile.meta.re_theta:g})",
        xlabel="y+",
        ylabel="U+",
        log_axes=True,
    )
    plot.lines.append(
        LineData(list(profile.y_plus), list(profile.u_plus), gid="data", label="data", color=0, style="markers")
    )
    for index, (gid, fit, name) in enumerate(
        (("region1", segmented.region1, "I"), ("region2", segmented.region2, "II")), start=1
    ):
        lo, hi = fit.window
        xs = np.geomspace(lo, hi, 50)
        label = f"{name}: {fit.amplitude:.4g} (y+)^{fit.exponent:.4g}"
        plot.lines.append(
            LineData(list(xs), list(evaluate_power_law(fit, xs)), gid=gid, label=label, color=index)
        )
    plot.annotations.append(
        AnnotationData(segmented.breakpoint_y_plus, gid="breakpoint", label="break", color=2, style="dotted")
    )
    plot.annotations.append(
        AnnotationData(reference_y_plus, gid="reference", label=f"y+ = {reference_y_plus:g}")
    )
    return plot


def unique_names(names: Iterable[str]) -> list[str]:
    """
    Make names distinct by suffixing repeats with _2, _3, ...

    The first occurrence keeps its name and a suffix never reuses a name
    that appears elsewhere in the input.

    Example:
        >>> unique_names(["run", "run", "run_2"])
        ['run', 'run_3', 'run_2']
    """
    names = list(names)
    reserved = set(names)
    seen: set[str] = set()
    result = []
    for name in names:
        candidate = name
        suffix = 2
        while candidate in seen or (candidate != name and candidate in reserved):
            candidate = f"{name}_{suffix}"
            suffix += 1
        seen.add(candidate)
        result.append(candidate)
    return result


def collapse_plot(
    series: Sequence[tuple[str, Sequence[CollapsePoint]]],
    title: str = "Universal collapse",
) -> Plot:
    """
    Build the psi against ln y+ figure with the bisectrix psi = ln y+.

    Args:
        series: (run label, points) pairs in drawing order. Repeated labels
            are drawn as separate series named by unique_names.
        title: Figure title.

    Raises:
        ValueError: If no points are given.
    """
    all_x = [p.ln_y_plus for _, pts in series for p in pts]
    all_y = [p.psi for _, pts in series for p in pts]
    if not all_x:
        raise ValueError("collapse_plot requires at least one point")
    lo = min(min(all_x), min(all_y)) - 0.25
    hi = max(max(all_x), max(all_y)) + 0.25

    plot = Plot(title=title, xlabel="ln y+", ylabel="psi")
    plot.lines.append(LineData([lo, hi], [lo, hi], gid="bisectrix", label="psi = ln y+", color="black"))
    names = unique_names(label for label, _ in series)
    for index, (name, (_, pts)) in enumerate(zip(names, series)):
        plot.lines.append(
            LineData(
                [p.ln_y_plus for p in pts],
                [p.psi for p in pts],
                gid=f"collapse-{name}",
                label=name,
                color=index,
                style="markers",
            )
        )
    return plot


# =============================================================================
# RENDERING
# =============================================================================

_LINESTYLES = {"solid": "-", "dashed": "--", "dotted": ":"}


def _render_line(ax: Any, line: LineData, index: int) -> None:
    color = _get_color(line.color, index)
    if line.style == "markers":
        ax.plot(
            line.x, line.y, linestyle="none", marker="o", markersize=4,
            color=color, label=line.label, gid=line.gid,
        )
    else:
        ax.plot(
            line.x, line.y, linestyle=_LINESTYLES.get(line.style, "-"), linewidth=1.5,
            color=color, label=line.label, gid=line.gid,
        )


def _render_plot(plot: Plot) -> Figure:
    """Render a plot to a matplotlib figure."""
    if not _MATPLOTLIB_AVAILABLE:
        raise RuntimeError("matplotlib is required for visualization")

    fig = Figure(figsize=(6.4, 4.8), layout="constrained")
    ax = fig.add_subplot()
    if plot.log_axes:
        ax.set_xscale("log")
        ax.set_yscale("log")

    for i, line in enumerate(plot.lines):
        _render_line(ax, line, i)

    for ann in plot.annotations:
        color = _get_color(ann.color)
        ax.axvline(ann.x, color=color, linestyle=_LINESTYLES.get(ann.style, "--"), linewidth=1.0, gid=ann.gid)
        if ann.label:
            ax.text(
                ann.x, 1.02, ann.label,
                transform=ax.get_xaxis_transform(),
                ha="center", va="bottom", fontsize=8, color=color,
            )

    ax.set_xlabel(plot.xlabel)
    ax.set_ylabel(plot.ylabel)
    ax.set_title(plot.title, fontsize=11)
    if any(line.label for line in plot.lines):
        ax.legend(loc="lower right", fontsize=8, framealpha=0.9)
    return fig


def savefig(plot: Plot, filename: str | Path) -> Path:
    """
    Render a plot and save it as SVG.

    Args:
        plot: The figure description.
        filename: Output path.

    Raises:
        RuntimeError: If matplotlib is not available.
        OSError: If the file cannot be written.

    Example:
        >>> visu.savefig(visu.collapse_plot(points), "collapse.svg")
    """
    if not _MATPLOTLIB_AVAILABLE:
        raise RuntimeError("matplotlib is required for visualization")
    path = Path(filename)
    with rc_context(_SVG_RC):
        fig = _render_plot(plot)
        fig.savefig(path, format="svg", metadata={"Date": None})
    return path
