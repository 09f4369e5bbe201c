"""
Fitted-law result types and their evaluators.

- PowerLawFit: U+ = A (y+)^alpha, fitted in (ln y+, ln U+)
- LogLawFit: U+ = (1/kappa) ln y+ + B, fitted in (ln y+, U+)
- SegmentedFit: the broken line, two power laws meeting at a breakpoint
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import overload

import numpy as np
from numpy.typing import NDArray

from boundary_scaling.exceptions import DomainError, ProfileValidationError

logger = logging.getLogger(__name__)

Window = tuple[float, float]


def _check_common(r_squared: float, n_points: int, window: Window) -> None:
    if not 0.0 <= r_squared <= 1.0:
        raise ProfileValidationError(f"r_squared={r_squared!r} outside [0, 1]", "0 <= r_squared <= 1")
    if n_points < 3:
        raise ProfileValidationError(f"n_points={n_points} below 3", "n_points >= 3")
    lo, hi = window
    if not lo < hi:
        raise ProfileValidationError(f"window ({lo!r}, {hi!r}) is empty", "window.lo < window.hi")


@dataclass(frozen=True)
class PowerLawFit:
    """
    A power law U+ = amplitude * (y+)^exponent.

    Attributes:
        amplitude: Coefficient A (or B for the outer region).
        exponent: Exponent alpha (or beta).
        stderr_amplitude: First-order standard error, amplitude * stderr(intercept).
        stderr_exponent: Standard error of the exponent.
        r_squared: Coefficient of determination in log-log coordinates.
        n_points: Number of samples fitted.
        window: (lo, hi) y+ extent of the fitted samples.
        sse: Sum of squared residuals in (ln y+, ln U+).
        rms_linear: RMS of the U+ prediction error in linear coordinates.
    """

    amplitude: float
    exponent: float
    stderr_amplitude: float = 0.0
    stderr_exponent: float = 0.0
    r_squared: float = 1.0
    n_points: int = 3
    window: Window = (1.0, math.inf)
    sse: float = 0.0
    rms_linear: float = 0.0

    def __post_init__(self) -> None:
        if not self.amplitude > 0:
            raise ProfileValidationError(f"amplitude={self.amplitude!r} must be positive", "amplitude > 0")
        _check_common(self.r_squared, self.n_points, self.window)


@dataclass(frozen=True)
class LogLawFit:
    """
    A logarithmic law U+ = (1/kappa) ln(y+) + intercept_b.

    Attributes:
        kappa: von Karman constant estimate.
        intercept_b: Additive constant B.
        stderr_kappa: First-order standard error, stderr(slope) / slope^2.
        stderr_b: Standard error of B.
        r_squared: Coefficient of determination in (ln y+, U+).
        n_points: Number of samples fitted.
        window: (lo, hi) y+ extent of the fitted samples.
        sse: Sum of squared residuals in (ln y+, U+).
        rms_linear: RMS of the U+ prediction error.
    """

    kappa: float
    intercept_b: float
    stderr_kappa: float = 0.0
    stderr_b: float = 0.0
    r_squared: float = 1.0
    n_points: int = 3
    window: Window = (1.0, math.inf)
    sse: float = 0.0
    rms_linear: float = 0.0

    def __post_init__(self) -> None:
        if not self.kappa > 0:
            raise ProfileValidationError(f"kappa={self.kappa!r} must be positive", "kappa > 0")
        _check_common(self.r_squared, self.n_points, self.window)


@dataclass(frozen=True)
class SegmentedFit:
    """
    Two power laws forming a broken line in (lg y+, lg U+).

    Region I runs from the sublayer cutoff to the breakpoint, region II from
    the breakpoint to the outermost sample; the breakpoint sample belongs to
    both.

    Measured profiles normally have an outer exponent above the inner one
    (beta ~ 2/ln Re + 0.01 against alpha = 3/(2 ln Re)), so beta > alpha is
    only reported at INFO level.

    Attributes:
        breakpoint_y_plus: y+ of the breakpoint sample.
        region1: Inner power law (A, alpha).
        region2: Outer power law (B, beta).
        total_sse: Sum of both regions' log-log SSE.
    """

    breakpoint_y_plus: float
    region1: PowerLawFit
    region2: PowerLawFit
    total_sse: float

    def __post_init__(self) -> None:
        if not self.region1.window[1] <= self.breakpoint_y_plus <= self.region2.window[0]:
            raise ProfileValidationError(
                f"breakpoint {self.breakpoint_y_plus!r} not between region windows "
                f"{self.region1.window} and {self.region2.window}",
                "region1.window.hi <= breakpoint <= region2.window.lo",
            )
        if self.region1.exponent < self.region2.exponent and not math.isclose(
            self.region1.exponent, self.region2.exponent, rel_tol=1e-9, abs_tol=1e-12
        ):
            logger.info(
                "outer exponent %.6g exceeds inner exponent %.6g at breakpoint y+=%g",
                self.region2.exponent,
                self.region1.exponent,
                self.breakpoint_y_plus,
            )


def _as_positive(y_plus: float | NDArray[np.float64], what: str) -> NDArray[np.float64]:
    arr = np.asarray(y_plus, dtype=float)
    if np.any(~(arr > 0)):
        bad = float(arr.ravel()[np.flatnonzero(~(arr.ravel() > 0))[0]])
        raise DomainError(f"{what} requires y_plus > 0, got {bad!r}", bad)
    return arr


@overload
def evaluate_power_law(fit: PowerLawFit, y_plus: float) -> float: ...
@overload
def evaluate_power_law(fit: PowerLawFit, y_plus: NDArray[np.float64]) -> NDArray[np.float64]: ...


def evaluate_power_law(fit: PowerLawFit, y_plus: float | NDArray[np.float64]) -> float | NDArray[np.float64]:
    """
    Evaluate U+ = A (y+)^alpha.

    Raises:
        DomainError: If any y_plus <= 0.

    Example:
        >>> evaluate_power_law(PowerLawFit(amplitude=8.5, exponent=0.14), 1.0)
        8.5
    """
    arr = _as_positive(y_plus, "evaluate_power_law")
    result = fit.amplitude * np.power(arr, fit.exponent)
    return float(result) if result.ndim == 0 else result


@overload
def evaluate_log_law(fit: LogLawFit, y_plus: float) -> float: ...
@overload
def evaluate_log_law(fit: LogLawFit, y_plus: NDArray[np.float64]) -> NDArray[np.float64]: ...


def evaluate_log_law(fit: LogLawFit, y_plus: float | NDArray[np.float64]) -> float | NDArray[np.float64]:
    """
    Evaluate U+ = (1/kappa) ln(y+) + B.

    Raises:
        DomainError: If any y_plus <= 0.
    """
    arr = _as_positive(y_plus, "evaluate_log_law")
    result = np.log(arr) / fit.kappa + fit.intercept_b
    return float(result) if result.ndim == 0 else result
