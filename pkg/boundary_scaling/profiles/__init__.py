"""
Profile data types and fitted-law results.

This module provides:
- ProfilePoint, RunMetadata, VelocityProfile: the analysed data
- PowerLawFit, LogLawFit, SegmentedFit: fitted results shared by all stages
- evaluate_power_law, evaluate_log_law: evaluators for fitted laws
"""

from __future__ import annotations

from boundary_scaling.profiles.fits import (
    LogLawFit,
    PowerLawFit,
    SegmentedFit,
    Window,
    evaluate_log_law,
    evaluate_power_law,
)
from boundary_scaling.profiles.profile import (
    MIN_PROFILE_POINTS,
    ProfilePoint,
    RunMetadata,
    VelocityProfile,
)

__all__ = [
    "MIN_PROFILE_POINTS",
    "ProfilePoint",
    "RunMetadata",
    "VelocityProfile",
    "PowerLawFit",
    "LogLawFit",
    "SegmentedFit",
    "Window",
    "evaluate_power_law",
    "evaluate_log_law",
]
