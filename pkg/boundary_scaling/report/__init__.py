"""
Run analysis, batch summaries and their outputs.

This module provides:
- analyze_run, analyze_profiles, analyze_batch: the processing pipeline
- compare_models: power law against log law per run
- emit_outputs: CSV, JSON and SVG files for a batch

The command line lives in boundary_scaling.report.cli.
"""

from __future__ import annotations

from boundary_scaling.report.analysis import (
    REPORT_COLUMNS,
    AnalysisConfig,
    BatchSummary,
    BetaCorrelation,
    ClosenessSummary,
    RunAnalysis,
    RunFailure,
    RunReport,
    analyze_batch,
    analyze_profile,
    analyze_profiles,
    analyze_run,
)
from boundary_scaling.report.compare import (
    LITERATURE_LOG_LAWS,
    LogLawConstants,
    ModelComparison,
    compare_batch,
    compare_models,
)
from boundary_scaling.report.outputs import OutputFormat, emit_outputs, write_comparison

__all__ = [
    "REPORT_COLUMNS",
    "AnalysisConfig",
    "RunReport",
    "RunAnalysis",
    "RunFailure",
    "BetaCorrelation",
    "ClosenessSummary",
    "BatchSummary",
    "analyze_run",
    "analyze_profile",
    "analyze_profiles",
    "analyze_batch",
    "LogLawConstants",
    "LITERATURE_LOG_LAWS",
    "ModelComparison",
    "compare_models",
    "compare_batch",
    "OutputFormat",
    "emit_outputs",
    "write_comparison",
]
