"""
Ordinary least-squares straight lines.

fit_line solves y = intercept + slope * x by least squares on the design
matrix [1, x] and derives homoskedastic standard errors from the residual
variance with n - 2 degrees of freedom.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from boundary_scaling.exceptions import DegenerateInputError


@dataclass(frozen=True)
class LinearFitResult:
    """
    Result of an OLS straight-line fit.

    Attributes:
        slope: Fitted slope.
        intercept: Fitted intercept.
        stderr_slope: Standard error of the slope.
        stderr_intercept: Standard error of the intercept.
        r_squared: Coefficient of determination; 1 when ys are constant.
        sse: Sum of squared residuals.
        n_points: Number of samples.
    """

    slope: float
    intercept: float
    stderr_slope: float
    stderr_intercept: float
    r_squared: float
    sse: float
    n_points: int

    def predict(self, x: ArrayLike) -> NDArray[np.float64]:
        """Evaluate the fitted line."""
        return self.intercept + self.slope * np.asarray(x, dtype=float)


def fit_line(xs: ArrayLike, ys: ArrayLike) -> LinearFitResult:
    """
    Fit a straight line by ordinary least squares.

    Args:
        xs: Abscissae, at least 3 and not all equal.
        ys: Ordinates, same length as xs.

    Returns:
        LinearFitResult with standard errors from s^2 = SSE / (n - 2).

    Raises:
        DegenerateInputError: On fewer than 3 points, mismatched lengths,
            non-finite values or constant xs.

    Example:
        >>> fit_line([1, 2, 3], [2, 4, 6]).slope
        2.0
    """
    x = np.asarray(xs, dtype=float).ravel()
    y = np.asarray(ys, dtype=float).ravel()
    if x.size != y.size:
        raise DegenerateInputError(f"fit_line: {x.size} xs but {y.size} ys")
    n = x.size
    if n < 3:
        raise DegenerateInputError(f"fit_line requires at least 3 points, got {n}")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise DegenerateInputError("fit_line: non-finite input")
    if np.ptp(x) == 0:
        raise DegenerateInputError("fit_line: xs are all equal")

    design = np.column_stack([np.ones(n), x])
    coef = np.linalg.lstsq(design, y, rcond=None)[0]
    residuals = y - design @ coef
    sse = float(residuals @ residuals)
    s2 = sse / (n - 2)
    cov = s2 * np.linalg.inv(design.T @ design)
    stderr = np.sqrt(np.clip(np.diag(cov), 0.0, None))

    y_dev = y - y.mean()
    sst = float(y_dev @ y_dev)
    if sst == 0.0:
        r_squared = 1.0
    else:
        r_squared = min(1.0, max(0.0, 1.0 - sse / sst))

    return LinearFitResult(
        slope=float(coef[1]),
        intercept=float(coef[0]),
        stderr_slope=float(stderr[1]),
        stderr_intercept=float(stderr[0]),
        r_squared=r_squared,
        sse=sse,
        n_points=n,
    )
