"""
Power-law and log-law fits of a velocity profile over a y+ window.
"""

from __future__ import annotations

import logging
import math

import numpy as np

from boundary_scaling.exceptions import InsufficientPointsError, NonPhysicalFitError
from boundary_scaling.profiles import LogLawFit, PowerLawFit, VelocityProfile, Window
from boundary_scaling.regression.linear import fit_line

logger = logging.getLogger(__name__)


def _windowed(profile: VelocityProfile, window: Window) -> tuple[np.ndarray, np.ndarray]:
    lo, hi = window
    ys, us = profile.in_window(lo, hi)
    if ys.size < 3:
        raise InsufficientPointsError((lo, hi), int(ys.size))
    return ys, us


def fit_power_law(profile: VelocityProfile, window: Window) -> PowerLawFit:
    """
    Fit U+ = A (y+)^alpha over a closed y+ window.

    The fit is a straight line in (ln y+, ln U+): A = exp(intercept),
    alpha = slope, and stderr(A) = A * stderr(intercept) to first order.

    Args:
        profile: The profile to fit.
        window: (lo, hi) y+ bounds, inclusive.

    Raises:
        InsufficientPointsError: If the window holds fewer than 3 samples.
    """
    ys, us = _windowed(profile, window)
    line = fit_line(np.log(ys), np.log(us))
    amplitude = math.exp(line.intercept)
    predicted = amplitude * np.power(ys, line.slope)
    logger.debug(
        "power law on %s y+ [%g, %g]: A=%.6g alpha=%.6g (n=%d)",
        profile.label, ys[0], ys[-1], amplitude, line.slope, line.n_points,
    )
    return PowerLawFit(
        amplitude=amplitude,
        exponent=line.slope,
        stderr_amplitude=amplitude * line.stderr_intercept,
        stderr_exponent=line.stderr_slope,
        r_squared=line.r_squared,
        n_points=line.n_points,
        window=(float(ys[0]), float(ys[-1])),
        sse=line.sse,
        rms_linear=float(np.sqrt(np.mean((us - predicted) ** 2))),
    )


def fit_log_law(profile: VelocityProfile, window: Window) -> LogLawFit:
    """
    Fit U+ = (1/kappa) ln(y+) + B over a closed y+ window.

    The fit is a straight line in (ln y+, U+): kappa = 1/slope, B = intercept,
    and stderr(kappa) = stderr(slope) / slope^2 to first order.

    Raises:
        InsufficientPointsError: If the window holds fewer than 3 samples.
        NonPhysicalFitError: If the fitted slope is not positive.
    """
    ys, us = _windowed(profile, window)
    line = fit_line(np.log(ys), us)
    if not line.slope > 0:
        raise NonPhysicalFitError(
            f"log-law slope {line.slope:.6g} is not positive; kappa undefined", "kappa"
        )
    residuals = us - line.predict(np.log(ys))
    return LogLawFit(
        kappa=1.0 / line.slope,
        intercept_b=line.intercept,
        stderr_kappa=line.stderr_slope / line.slope**2,
        stderr_b=line.stderr_intercept,
        r_squared=line.r_squared,
        n_points=line.n_points,
        window=(float(ys[0]), float(ys[-1])),
        sse=line.sse,
        rms_linear=float(np.sqrt(np.mean(residuals**2))),
    )
