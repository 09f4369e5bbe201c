"""
Per-run analysis pipeline and batch summaries.

analyze_run chains the processing stages for one profile:

1. segmentation: fit_broken_line (breakpoint search plus both region power laws)
2. log_law: fit_log_law over the region I window, for model comparison
3. scaling: ln Re1 and ln Re2 from region I, then the effective Reynolds number
4. diagnostics: Gamma over region I
5. collapse: psi over region I at the effective ln Re

A failing stage raises StageError naming the run and the stage. Batches
collect such failures per run and carry on; results keep input order.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Iterator, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, TypeVar, Union

import numpy as np

from boundary_scaling.diagnostics import (
    CollapseDeviation,
    CollapsePoint,
    GammaSeries,
    collapse_deviation,
    gamma_series,
    psi_transform,
    split_by_re_theta,
)
from boundary_scaling.exceptions import BoundaryScalingError, DegenerateInputError, StageError
from boundary_scaling.ingest import ProfileFormat, parse_profile_file
from boundary_scaling.profiles import LogLawFit, SegmentedFit, VelocityProfile
from boundary_scaling.regression import fit_broken_line, fit_line, fit_log_law
from boundary_scaling.scaling import (
    DEFAULT_CLOSENESS_THRESHOLD_PCT,
    NIKURADZE_CONSTANTS,
    ScalingLawConstants,
    ScalingSolution,
    solve_scaling,
)

logger = logging.getLogger(__name__)

SUBLAYER_CUTOFF_RANGE = (70.0, 200.0)
MIN_CORRELATION_RUNS = 3

EXIT_OK = 0
EXIT_TOTAL_FAILURE = 1
EXIT_PARTIAL_FAILURE = 2

# Errors a stage may raise on bad data; anything else is a bug and propagates
_STAGE_ERRORS = (BoundaryScalingError, ValueError, ArithmeticError, np.linalg.LinAlgError)

REPORT_COLUMNS: tuple[str, ...] = (
    "label",
    "re_theta",
    "a_amplitude",
    "alpha",
    "b2_amplitude",
    "beta",
    "kappa_fit",
    "b_fit",
    "ln_re1",
    "ln_re2",
    "discrepancy_pct",
    "ln_re_eff",
    "re_eff",
    "lambda_scale",
    "theta_over_lambda",
    "close_enough",
    "sse_power_region1",
    "sse_loglaw_region1",
    "rms_power_region1",
    "rms_loglaw_region1",
    "r_squared_region1",
    "r_squared_region2",
    "breakpoint_y_plus",
    "gamma_mean",
    "gamma_std",
)


@dataclass(frozen=True)
class AnalysisConfig:
    """
    Settings of the analysis pipeline.

    Attributes:
        sublayer_cutoff: Samples below this y+ are excluded from the fits (70..200).
        breakpoint_range: (lo, hi) y+ search range; hi None means half the
            outermost y+ of each profile.
        closeness_threshold_pct: Largest ln Re discrepancy counted as close.
        re_theta_split: Re_theta separating the two collapse bands.
        closeness_re_theta_min: Only runs above this Re_theta enter the
            closeness count of a batch.
        constants: Scaling-law constants.
        reference_y_plus: Vertical reference line of the profile plots.
        max_workers: Thread pool size for batches (None lets the pool decide).
        input_format: Profile file format read by analyze_batch.
        metadata: Metadata for headerless files, or overrides for canonical ones.
    """

    sublayer_cutoff: float = 100.0
    breakpoint_range: tuple[float, float | None] = (150.0, None)
    closeness_threshold_pct: float = DEFAULT_CLOSENESS_THRESHOLD_PCT
    re_theta_split: float = 15000.0
    closeness_re_theta_min: float = 10000.0
    constants: ScalingLawConstants = NIKURADZE_CONSTANTS
    reference_y_plus: float = 200.0
    max_workers: int | None = None
    input_format: ProfileFormat = ProfileFormat.CANONICAL
    metadata: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        lo_cut, hi_cut = SUBLAYER_CUTOFF_RANGE
        if not lo_cut <= self.sublayer_cutoff <= hi_cut:
            raise ValueError(
                f"sublayer_cutoff must lie in [{lo_cut:g}, {hi_cut:g}], got {self.sublayer_cutoff!r}"
            )
        lo, hi = self.breakpoint_range
        if not lo > 0:
            raise ValueError(f"breakpoint range lower bound must be positive, got {lo!r}")
        if hi is not None and not hi > lo:
            raise ValueError(f"breakpoint range ({lo!r}, {hi!r}) is empty")
        if not self.closeness_threshold_pct > 0:
            raise ValueError(
                f"closeness_threshold_pct must be positive, got {self.closeness_threshold_pct!r}"
            )
        if not self.reference_y_plus > 0:
            raise ValueError(f"reference_y_plus must be positive, got {self.reference_y_plus!r}")
        if self.max_workers is not None and self.max_workers < 1:
            raise ValueError(f"max_workers must be at least 1, got {self.max_workers!r}")
        object.__setattr__(self, "input_format", ProfileFormat(self.input_format))


@dataclass(frozen=True)
class RunReport(Mapping[str, object]):
    """
    One row of the run table.

    Iterating yields the column names in REPORT_COLUMNS order, so a report
    can be used directly as a mapping.
    """

    label: str
    re_theta: float
    a_amplitude: float
    alpha: float
    b2_amplitude: float
    beta: float
    kappa_fit: float
    b_fit: float
    ln_re1: float
    ln_re2: float
    discrepancy_pct: float
    ln_re_eff: float
    re_eff: float
    lambda_scale: float
    theta_over_lambda: float | None
    close_enough: bool
    sse_power_region1: float
    sse_loglaw_region1: float
    rms_power_region1: float
    rms_loglaw_region1: float
    r_squared_region1: float
    r_squared_region2: float
    breakpoint_y_plus: float
    gamma_mean: float
    gamma_std: float

    def __post_init__(self) -> None:
        for name in REPORT_COLUMNS:
            value = getattr(self, name)
            if isinstance(value, float) and not math.isfinite(value):
                raise ValueError(f"report field {name} of '{self.label}' is not finite: {value!r}")
        if self.discrepancy_pct < 0:
            raise ValueError(f"discrepancy_pct must be non-negative, got {self.discrepancy_pct!r}")

    def __getitem__(self, key: str) -> object:
        if key not in REPORT_COLUMNS:
            raise KeyError(key)
        return getattr(self, key)

    def __iter__(self) -> Iterator[str]:
        yield from REPORT_COLUMNS

    def __len__(self) -> int:
        return len(REPORT_COLUMNS)

    def to_dict(self) -> dict[str, object]:
        """Return a plain dict representation in column order."""
        return {name: getattr(self, name) for name in REPORT_COLUMNS}


@dataclass(frozen=True)
class RunAnalysis:
    """Every intermediate result of one run, kept for plotting and collapse."""

    profile: VelocityProfile
    segmented: SegmentedFit
    log_law: LogLawFit
    scaling: ScalingSolution
    gamma: GammaSeries
    collapse_points: tuple[CollapsePoint, ...]
    report: RunReport

    @property
    def label(self) -> str:
        return self.profile.label


@dataclass(frozen=True)
class RunFailure:
    """A run that could not be analysed."""

    source: str
    stage: str
    message: str

    def to_dict(self) -> dict[str, str]:
        return {"source": self.source, "stage": self.stage, "message": self.message}


@dataclass(frozen=True)
class BetaCorrelation:
    """
    OLS fit of the outer exponent beta against 1 / ln Re_eff across runs.

    Attributes:
        status: "ok", "insufficient runs" (fewer than 3) or "degenerate"
            (all runs share one ln Re_eff).
        n_runs: Number of runs entering the fit.
        slope: Fitted slope (2 for the reference correlation).
        intercept: Fitted intercept (0.01 for the reference correlation).
    """

    status: str
    n_runs: int
    slope: float | None = None
    intercept: float | None = None
    stderr_slope: float | None = None
    stderr_intercept: float | None = None
    r_squared: float | None = None

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def to_dict(self) -> dict[str, object]:
        """Return a plain dict representation."""
        return {
            "status": self.status,
            "n_runs": self.n_runs,
            "slope": self.slope,
            "intercept": self.intercept,
            "stderr_slope": self.stderr_slope,
            "stderr_intercept": self.stderr_intercept,
            "r_squared": self.r_squared,
        }


@dataclass(frozen=True)
class ClosenessSummary:
    """How many runs above a Re_theta floor pass the closeness criterion."""

    re_theta_min: float
    threshold_pct: float
    n_runs: int
    n_close: int

    def to_dict(self) -> dict[str, object]:
        return {
            "re_theta_min": self.re_theta_min,
            "threshold_pct": self.threshold_pct,
            "n_runs": self.n_runs,
            "n_close": self.n_close,
        }


@dataclass(frozen=True)
class BatchSummary:
    """
    Result of analysing a batch of runs.

    Attributes:
        reports: Run reports in input order.
        beta_vs_lnre: Correlation of beta against 1 / ln Re_eff.
        collapse_stats_by_band: Collapse deviation per Re_theta band; a band
            without runs maps to None.
        analyses: Full per-run results, parallel to reports.
        failures: Runs that failed, in input order.
        closeness: Closeness count over the high-Re_theta runs.
        config: The configuration used.
    """

    reports: tuple[RunReport, ...]
    beta_vs_lnre: BetaCorrelation
    collapse_stats_by_band: dict[str, CollapseDeviation | None]
    analyses: tuple[RunAnalysis, ...] = ()
    failures: tuple[RunFailure, ...] = ()
    closeness: ClosenessSummary | None = None
    config: AnalysisConfig = field(default_factory=AnalysisConfig)

    @property
    def exit_code(self) -> int:
        """0 if every run succeeded, 2 on partial failure, 1 if no run succeeded."""
        if not self.reports:
            return EXIT_TOTAL_FAILURE
        if self.failures:
            return EXIT_PARTIAL_FAILURE
        return EXIT_OK


@contextmanager
def _stage(label: str, stage: str) -> Iterator[None]:
    try:
        yield
    except _STAGE_ERRORS as exc:
        raise StageError(label, stage, exc) from exc


def analyze_profile(profile: VelocityProfile, config: AnalysisConfig | None = None) -> RunAnalysis:
    """
    Run the full pipeline on one profile and keep every intermediate.

    Raises:
        StageError: If a stage fails; ``stage`` names it and the original
            error is chained as ``__cause__``.
    """
    config = config or AnalysisConfig()
    label = profile.label
    search_lo, search_hi = config.breakpoint_range

    with _stage(label, "segmentation"):
        segmented = fit_broken_line(
            profile, search_lo=search_lo, search_hi=search_hi, sublayer_cutoff=config.sublayer_cutoff
        )
    region1, region2 = segmented.region1, segmented.region2

    with _stage(label, "log_law"):
        log_law = fit_log_law(profile, region1.window)

    with _stage(label, "scaling"):
        solution = solve_scaling(region1, profile.meta, config.constants, config.closeness_threshold_pct)

    with _stage(label, "diagnostics"):
        gamma = gamma_series(profile, region1.window)

    with _stage(label, "collapse"):
        collapse_points = psi_transform(profile, solution.ln_re_eff, config.constants, region1.window)

    with _stage(label, "report"):
        report = RunReport(
            label=label,
            re_theta=profile.meta.re_theta,
            a_amplitude=region1.amplitude,
            alpha=region1.exponent,
            b2_amplitude=region2.amplitude,
            beta=region2.exponent,
            kappa_fit=log_law.kappa,
            b_fit=log_law.intercept_b,
            ln_re1=solution.ln_re1,
            ln_re2=solution.ln_re2,
            discrepancy_pct=solution.discrepancy_pct,
            ln_re_eff=solution.ln_re_eff,
            re_eff=solution.re_eff,
            lambda_scale=solution.lambda_scale,
            theta_over_lambda=solution.theta_over_lambda,
            close_enough=solution.close_enough,
            sse_power_region1=region1.sse,
            sse_loglaw_region1=log_law.sse,
            rms_power_region1=region1.rms_linear,
            rms_loglaw_region1=log_law.rms_linear,
            r_squared_region1=region1.r_squared,
            r_squared_region2=region2.r_squared,
            breakpoint_y_plus=segmented.breakpoint_y_plus,
            gamma_mean=gamma.window_mean,
            gamma_std=gamma.window_std,
        )

    logger.info(
        "%s: breakpoint y+=%g, ln Re1=%.4f, ln Re2=%.4f, discrepancy %.2f%%",
        label, segmented.breakpoint_y_plus, solution.ln_re1, solution.ln_re2, solution.discrepancy_pct,
    )
    if not solution.close_enough:
        logger.warning(
            "%s: ln Re estimates differ by %.2f%% (threshold %g%%)",
            label, solution.discrepancy_pct, config.closeness_threshold_pct,
        )
    return RunAnalysis(
        profile=profile,
        segmented=segmented,
        log_law=log_law,
        scaling=solution,
        gamma=gamma,
        collapse_points=collapse_points,
        report=report,
    )


def analyze_run(profile: VelocityProfile, config: AnalysisConfig | None = None) -> RunReport:
    """
    Analyse one profile and return its report row.

    Example:
        >>> report = analyze_run(profile, AnalysisConfig(sublayer_cutoff=100))
        >>> report.discrepancy_pct <= 3
    """
    return analyze_profile(profile, config).report


def fit_beta_correlation(analyses: Sequence[RunAnalysis]) -> BetaCorrelation:
    """Fit beta = slope / ln Re_eff + intercept across runs."""
    n = len(analyses)
    if n < MIN_CORRELATION_RUNS:
        return BetaCorrelation(status="insufficient runs", n_runs=n)
    inv_ln_re = [1.0 / a.scaling.ln_re_eff for a in analyses]
    betas = [a.segmented.region2.exponent for a in analyses]
    try:
        line = fit_line(inv_ln_re, betas)
    except DegenerateInputError:
        return BetaCorrelation(status="degenerate", n_runs=n)
    return BetaCorrelation(
        status="ok",
        n_runs=n,
        slope=line.slope,
        intercept=line.intercept,
        stderr_slope=line.stderr_slope,
        stderr_intercept=line.stderr_intercept,
        r_squared=line.r_squared,
    )


def band_names(split: float) -> tuple[str, str]:
    """Names of the low and high Re_theta bands."""
    return f"re_theta <= {split:g}", f"re_theta > {split:g}"


def collapse_by_band(
    analyses: Sequence[RunAnalysis], split: float
) -> dict[str, CollapseDeviation | None]:
    """Collapse deviation of the runs at or below and above a Re_theta split."""
    low, high = split_by_re_theta(
        [(a.profile.meta.re_theta, a.collapse_points) for a in analyses], split
    )
    low_name, high_name = band_names(split)
    return {
        low_name: collapse_deviation(low) if low else None,
        high_name: collapse_deviation(high) if high else None,
    }


def _closeness(analyses: Sequence[RunAnalysis], config: AnalysisConfig) -> ClosenessSummary:
    selected = [a for a in analyses if a.profile.meta.re_theta > config.closeness_re_theta_min]
    return ClosenessSummary(
        re_theta_min=config.closeness_re_theta_min,
        threshold_pct=config.closeness_threshold_pct,
        n_runs=len(selected),
        n_close=sum(a.scaling.close_enough for a in selected),
    )


Outcome = Union[RunAnalysis, RunFailure]
_T = TypeVar("_T")


def _run_all(items: Sequence[_T], task: Callable[[_T], Outcome], config: AnalysisConfig) -> list[Outcome]:
    if config.max_workers == 1 or len(items) <= 1:
        return [task(item) for item in items]
    with ThreadPoolExecutor(max_workers=config.max_workers) as pool:
        return list(pool.map(task, items))


def summarize(outcomes: Iterable[Outcome], config: AnalysisConfig) -> BatchSummary:
    """Assemble a BatchSummary from per-run outcomes in input order."""
    outcomes = list(outcomes)
    analyses = tuple(o for o in outcomes if isinstance(o, RunAnalysis))
    failures = tuple(o for o in outcomes if isinstance(o, RunFailure))
    summary = BatchSummary(
        reports=tuple(a.report for a in analyses),
        beta_vs_lnre=fit_beta_correlation(analyses),
        collapse_stats_by_band=collapse_by_band(analyses, config.re_theta_split),
        analyses=analyses,
        failures=failures,
        closeness=_closeness(analyses, config),
        config=config,
    )
    logger.info("analysed %d runs, %d failed", len(analyses), len(failures))
    return summary


def _failure(source: str, exc: Exception) -> RunFailure:
    stage = exc.stage if isinstance(exc, StageError) else "ingest"
    logger.warning("%s failed in %s: %s", source, stage, exc)
    return RunFailure(source=source, stage=stage, message=str(exc))


def analyze_profiles(
    profiles: Sequence[VelocityProfile], config: AnalysisConfig | None = None
) -> BatchSummary:
    """
    Analyse in-memory profiles; per-run failures are collected, not raised.

    Example:
        >>> summary = analyze_profiles([generate(spec) for spec in specs])
        >>> summary.beta_vs_lnre.slope
    """
    config = config or AnalysisConfig()

    def task(profile: VelocityProfile) -> Outcome:
        try:
            return analyze_profile(profile, config)
        except StageError as exc:
            return _failure(profile.label, exc)

    return summarize(_run_all(list(profiles), task, config), config)


def analyze_batch(paths: Sequence[str | Path], config: AnalysisConfig | None = None) -> BatchSummary:
    """
    Read and analyse profile files.

    Unreadable or invalid files and failing runs become RunFailure records
    naming the file; the rest of the batch is still analysed. Check
    ``exit_code`` for the overall outcome.

    Raises:
        ValueError: If paths is empty.
    """
    if not paths:
        raise ValueError("analyze_batch requires at least one file")
    config = config or AnalysisConfig()

    def task(path: str | Path) -> Outcome:
        try:
            profile = parse_profile_file(path, config.input_format, config.metadata)
            return analyze_profile(profile, config)
        except (StageError, BoundaryScalingError, ValueError, OSError) as exc:
            return _failure(str(path), exc)

    return summarize(_run_all(list(paths), task, config), config)
