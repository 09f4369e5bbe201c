"""
Diagnostic function Gamma and the universal-collapse coordinate psi.

Gamma = (y+/U+) dU+/dy+ is the local slope of the profile in log-log
coordinates, d(ln U+)/d(ln y+). It is constant wherever a power law holds,
with a constant that differs from run to run when the exponent depends on
the Reynolds number.

psi = (1/alpha) ln(U+ / (c1 ln Re + c2)) with alpha = c / ln Re maps a profile
obeying the scaling law onto the bisectrix psi = ln y+. With the default
constants this is psi = (1/alpha) ln(2 alpha U+ / (sqrt(3) + 5 alpha)).
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from boundary_scaling.exceptions import DomainError
from boundary_scaling.profiles import VelocityProfile, Window
from boundary_scaling.scaling import NIKURADZE_CONSTANTS, ScalingLawConstants


@dataclass(frozen=True)
class GammaPoint:
    """Gamma at one sample; one_sided marks the two-point endpoint slopes."""

    y_plus: float
    gamma: float
    one_sided: bool = False


@dataclass(frozen=True)
class GammaSeries:
    """
    Gamma along a whole profile with statistics over a window.

    Attributes:
        points: Gamma at every sample, in profile order.
        window_mean: Mean of Gamma over the window.
        window_std: Population standard deviation of Gamma over the window.
        window: The (lo, hi) y+ window the statistics cover.
    """

    points: tuple[GammaPoint, ...]
    window_mean: float
    window_std: float
    window: Window

    @property
    def gamma(self) -> np.ndarray:
        return np.array([p.gamma for p in self.points])


def gamma_series(profile: VelocityProfile, window: Window | None = None) -> GammaSeries:
    """
    Compute Gamma as the local log-log slope of a profile.

    Interior samples use the three-point derivative on the nonuniform
    (ln y+, ln U+) grid; the two endpoints use one-sided two-point slopes.

    Args:
        profile: The profile.
        window: (lo, hi) y+ window for the statistics; the whole profile if None.

    Example:
        >>> series = gamma_series(profile, window=(100, 500))
        >>> series.window_mean
    """
    ln_y = np.log(profile.y_plus)
    gamma = np.gradient(np.log(profile.u_plus), ln_y, edge_order=1)
    n = gamma.size
    points = tuple(
        GammaPoint(float(y), float(g), i == 0 or i == n - 1)
        for i, (y, g) in enumerate(zip(profile.y_plus, gamma))
    )
    if window is None:
        window = (float(profile.y_plus[0]), float(profile.y_plus[-1]))
    selected = gamma[profile.window_mask(*window)]
    if selected.size == 0:
        raise ValueError(f"gamma window {window} contains no samples of '{profile.label}'")
    return GammaSeries(
        points=points,
        window_mean=float(np.mean(selected)),
        window_std=float(np.std(selected)),
        window=(float(window[0]), float(window[1])),
    )


@dataclass(frozen=True)
class CollapsePoint:
    """One sample in collapse coordinates (ln y+, psi)."""

    ln_y_plus: float
    psi: float
    run_label: str

    def __post_init__(self) -> None:
        if not (math.isfinite(self.ln_y_plus) and math.isfinite(self.psi)):
            raise ValueError(f"collapse point of '{self.run_label}' is not finite")

    @property
    def deviation(self) -> float:
        return self.psi - self.ln_y_plus


def psi_transform(
    profile: VelocityProfile,
    ln_re: float,
    k: ScalingLawConstants = NIKURADZE_CONSTANTS,
    window: Window | None = None,
) -> tuple[CollapsePoint, ...]:
    """
    Map windowed samples to (ln y+, psi).

    Args:
        profile: The profile.
        ln_re: The run's (effective) ln Re.
        k: Scaling-law constants.
        window: (lo, hi) y+ window; the whole profile if None.

    Raises:
        DomainError: If ln_re <= 0 or the logarithm's argument is not positive
            at some sample.
    """
    if not ln_re > 0:
        raise DomainError(f"psi_transform requires ln_re > 0, got {ln_re!r}", ln_re)
    alpha = k.c / ln_re
    amplitude = k.c1 * ln_re + k.c2
    if window is None:
        ys, us = profile.y_plus, profile.u_plus
    else:
        ys, us = profile.in_window(*window)
    argument = us / amplitude
    bad = np.flatnonzero(~(argument > 0))
    if bad.size:
        y_bad = float(ys[bad[0]])
        raise DomainError(f"psi_transform: log argument not positive at y+={y_bad:g}", y_bad)
    psi = np.log(argument) / alpha
    return tuple(
        CollapsePoint(float(math.log(y)), float(p), profile.label) for y, p in zip(ys, psi)
    )


@dataclass(frozen=True)
class CollapseDeviation:
    """
    Statistics of psi - ln y+ over a set of collapse points.

    Attributes:
        mean_offset: Mean deviation (the parallel shift).
        rms: Root mean square deviation.
        max_abs: Largest absolute deviation.
        std: RMS about the mean.
        n_points: Number of points.
    """

    mean_offset: float
    rms: float
    max_abs: float
    std: float
    n_points: int

    def to_dict(self) -> dict[str, float | int]:
        """Return a plain dict representation."""
        return {
            "mean_offset": self.mean_offset,
            "rms": self.rms,
            "max_abs": self.max_abs,
            "std": self.std,
            "n_points": self.n_points,
        }


def collapse_deviation(points: Iterable[CollapsePoint]) -> CollapseDeviation:
    """
    Quantify how well points collapse onto the bisectrix.

    Raises:
        ValueError: If points is empty.
    """
    d = np.array([p.deviation for p in points], dtype=float)
    if d.size == 0:
        raise ValueError("collapse_deviation requires at least one point")
    return CollapseDeviation(
        mean_offset=float(np.mean(d)),
        rms=float(np.sqrt(np.mean(d**2))),
        max_abs=float(np.max(np.abs(d))),
        std=float(np.std(d)),
        n_points=int(d.size),
    )


def split_by_re_theta(
    points_by_run: Sequence[tuple[float, Sequence[CollapsePoint]]], split: float
) -> tuple[list[CollapsePoint], list[CollapsePoint]]:
    """
    Group collapse points into Re_theta <= split and Re_theta > split bands.

    Args:
        points_by_run: (re_theta, points) per run.
        split: The band boundary.

    Returns:
        (low band points, high band points).
    """
    low: list[CollapsePoint] = []
    high: list[CollapsePoint] = []
    for re_theta, pts in points_by_run:
        (high if re_theta > split else low).extend(pts)
    return low, high
