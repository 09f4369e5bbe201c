"""
Least-squares machinery.

This module provides:
- fit_line: OLS straight line with standard errors
- fit_power_law, fit_log_law: windowed fits of a velocity profile
- fit_broken_line: two-segment power-law fit with exhaustive breakpoint search
"""

from __future__ import annotations

from boundary_scaling.regression.laws import fit_log_law, fit_power_law
from boundary_scaling.regression.linear import LinearFitResult, fit_line
from boundary_scaling.regression.segmented import (
    DEFAULT_SEARCH_HI_FRACTION,
    DEFAULT_SEARCH_LO,
    DEFAULT_SUBLAYER_CUTOFF,
    fit_broken_line,
)

__all__ = [
    "LinearFitResult",
    "fit_line",
    "fit_power_law",
    "fit_log_law",
    "fit_broken_line",
    "DEFAULT_SUBLAYER_CUTOFF",
    "DEFAULT_SEARCH_LO",
    "DEFAULT_SEARCH_HI_FRACTION",
]
