"""
boundary-scaling: Reynolds-number-dependent scaling analysis of turbulent boundary layers.

This package processes mean-velocity profiles of zero-pressure-gradient
boundary layers and tests them against a Reynolds-number-dependent power law:
- **Profiles**: `VelocityProfile` in wall units with run metadata
- **Ingest**: canonical and whitespace-table profile files
- **Regression**: OLS lines, power-law and log-law fits, broken-line fits with
  exhaustive breakpoint search
- **Scaling**: ln Re from the fitted amplitude and exponent, effective Reynolds
  number and length scale, outer exponent correlation
- **Diagnostics**: the local log-log slope Gamma and the collapse coordinate psi
- **Synthetic**: seeded, portable synthetic profiles for every model
- **Report**: per-run tables, batch statistics, SVG figures and a command line
"""

from __future__ import annotations

__version__ = "0.1.0"

# Profiles
from boundary_scaling.profiles import (
    LogLawFit,
    PowerLawFit,
    ProfilePoint,
    RunMetadata,
    SegmentedFit,
    VelocityProfile,
    evaluate_log_law,
    evaluate_power_law,
)

# Errors
from boundary_scaling.exceptions import (
    BoundaryScalingError,
    DegenerateInputError,
    DomainError,
    InsufficientPointsError,
    MissingMetadataError,
    NonPhysicalFitError,
    NoValidBreakpointError,
    OutputWriteError,
    ProfileParseError,
    ProfileValidationError,
    StageError,
)

# Ingest
from boundary_scaling.ingest import (
    ProfileFormat,
    parse_profile,
    parse_profile_file,
    write_profile,
    write_profile_file,
)

# Regression
from boundary_scaling.regression import (
    LinearFitResult,
    fit_broken_line,
    fit_line,
    fit_log_law,
    fit_power_law,
)

# Scaling
from boundary_scaling.scaling import (
    NIKURADZE_CONSTANTS,
    ScalingLawConstants,
    ScalingSolution,
    beta_correlation,
    effective_reynolds,
    scaling_law_velocity,
    solve_ln_re1,
    solve_ln_re2,
    solve_scaling,
)

# Diagnostics
from boundary_scaling.diagnostics import (
    CollapseDeviation,
    CollapsePoint,
    GammaSeries,
    collapse_deviation,
    gamma_series,
    psi_transform,
)

# Synthetic profiles
from boundary_scaling.synthetic import (
    GeneratorSpec,
    GridSpec,
    LogLawModel,
    ScalingLawModel,
    TwoSegmentModel,
    generate,
)

# Report
from boundary_scaling.report import (
    AnalysisConfig,
    BatchSummary,
    OutputFormat,
    RunReport,
    analyze_batch,
    analyze_profiles,
    analyze_run,
    emit_outputs,
)

__all__ = [
    "__version__",
    # Profiles
    "ProfilePoint",
    "RunMetadata",
    "VelocityProfile",
    "PowerLawFit",
    "LogLawFit",
    "SegmentedFit",
    "evaluate_power_law",
    "evaluate_log_law",
    # Errors
    "BoundaryScalingError",
    "DomainError",
    "ProfileValidationError",
    "ProfileParseError",
    "MissingMetadataError",
    "DegenerateInputError",
    "InsufficientPointsError",
    "NonPhysicalFitError",
    "NoValidBreakpointError",
    "StageError",
    "OutputWriteError",
    # Ingest
    "ProfileFormat",
    "parse_profile",
    "parse_profile_file",
    "write_profile",
    "write_profile_file",
    # Regression
    "LinearFitResult",
    "fit_line",
    "fit_power_law",
    "fit_log_law",
    "fit_broken_line",
    # Scaling
    "ScalingLawConstants",
    "NIKURADZE_CONSTANTS",
    "ScalingSolution",
    "scaling_law_velocity",
    "solve_ln_re1",
    "solve_ln_re2",
    "effective_reynolds",
    "solve_scaling",
    "beta_correlation",
    # Diagnostics
    "GammaSeries",
    "CollapsePoint",
    "CollapseDeviation",
    "gamma_series",
    "psi_transform",
    "collapse_deviation",
    # Synthetic
    "ScalingLawModel",
    "LogLawModel",
    "TwoSegmentModel",
    "GridSpec",
    "GeneratorSpec",
    "generate",
    # Report
    "AnalysisConfig",
    "RunReport",
    "BatchSummary",
    "OutputFormat",
    "analyze_run",
    "analyze_profiles",
    "analyze_batch",
    "emit_outputs",
]
