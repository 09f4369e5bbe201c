"""
Reynolds-number-dependent scaling law.

The law reads

    U+ = (c1 ln Re + c2) (y+)^(c / ln Re)

with c1 = 1/sqrt(3), c2 = 5/2, c = 3/2 calibrated on Nikuradze's pipe data.
Equivalently, with alpha = c / ln Re and the default constants,

    U+ = ((sqrt(3) + 5 alpha) / (2 alpha)) (y+)^alpha.

Given a fitted inner power law U+ = A (y+)^alpha, two estimates of ln Re
follow, one from the amplitude and one from the exponent:

    c1 ln Re1 + c2 = A        c / ln Re2 = alpha

If they agree, the effective Reynolds number is their geometric mean,
Re = sqrt(Re1 Re2), and defines a length scale Lambda = nu Re / U.

This module also provides the outer-region correlation beta = 2 / ln Re + 0.01.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import overload

import numpy as np
from numpy.typing import NDArray

from boundary_scaling.exceptions import DomainError, NonPhysicalFitError
from boundary_scaling.profiles import PowerLawFit, RunMetadata

DEFAULT_CLOSENESS_THRESHOLD_PCT = 3.0

BETA_SLOPE = 2.0
BETA_INTERCEPT = 0.01

# ln Re at or above this overflows exp()
MAX_LN_RE = math.log(sys.float_info.max)


@dataclass(frozen=True)
class ScalingLawConstants:
    """
    Universal constants of the scaling law.

    Attributes:
        c1: Amplitude slope in ln Re (default 1/sqrt(3)). Zero is accepted and
            makes the amplitude Re-independent; ln Re1 is then undefined.
        c2: Amplitude offset (default 5/2).
        c: Exponent numerator (default 3/2).
    """

    c1: float = 1.0 / math.sqrt(3.0)
    c2: float = 2.5
    c: float = 1.5

    def __post_init__(self) -> None:
        if not (math.isfinite(self.c1) and self.c1 >= 0):
            raise ValueError(f"c1 must be a non-negative finite number, got {self.c1!r}")
        if not (math.isfinite(self.c2) and self.c2 > 0):
            raise ValueError(f"c2 must be positive, got {self.c2!r}")
        if not (math.isfinite(self.c) and self.c > 0):
            raise ValueError(f"c must be positive, got {self.c!r}")


NIKURADZE_CONSTANTS = ScalingLawConstants()


def _check_ln_re(ln_re: float, func_name: str) -> float:
    if not ln_re > 0:
        raise DomainError(f"{func_name} requires ln_re > 0, got {ln_re!r}", ln_re)
    return float(ln_re)


def scaling_amplitude(ln_re: float, k: ScalingLawConstants = NIKURADZE_CONSTANTS) -> float:
    """Amplitude A(ln Re) = c1 ln Re + c2."""
    return k.c1 * _check_ln_re(ln_re, "scaling_amplitude") + k.c2


def scaling_exponent(ln_re: float, k: ScalingLawConstants = NIKURADZE_CONSTANTS) -> float:
    """Exponent alpha(ln Re) = c / ln Re."""
    return k.c / _check_ln_re(ln_re, "scaling_exponent")


def amplitude_for_exponent(alpha: float, k: ScalingLawConstants = NIKURADZE_CONSTANTS) -> float:
    """
    Amplitude implied by an exponent, c1 c / alpha + c2.

    With the default constants this is (sqrt(3) + 5 alpha) / (2 alpha).
    """
    if not alpha > 0:
        raise DomainError(f"amplitude_for_exponent requires alpha > 0, got {alpha!r}", alpha)
    return k.c1 * k.c / alpha + k.c2


@overload
def scaling_law_velocity(ln_re: float, y_plus: float, k: ScalingLawConstants = ...) -> float: ...
@overload
def scaling_law_velocity(
    ln_re: float, y_plus: NDArray[np.float64], k: ScalingLawConstants = ...
) -> NDArray[np.float64]: ...


def scaling_law_velocity(
    ln_re: float,
    y_plus: float | NDArray[np.float64],
    k: ScalingLawConstants = NIKURADZE_CONSTANTS,
) -> float | NDArray[np.float64]:
    """
    Evaluate U+ = (c1 ln Re + c2) (y+)^(c / ln Re).

    Raises:
        DomainError: If ln_re <= 0 or any y_plus <= 0.

    Example:
        >>> round(scaling_law_velocity(9.0, 1.0), 4)
        7.6962
    """
    ln_re = _check_ln_re(ln_re, "scaling_law_velocity")
    arr = np.asarray(y_plus, dtype=float)
    if np.any(~(arr > 0)):
        raise DomainError("scaling_law_velocity requires y_plus > 0", float(np.min(arr)))
    result = (k.c1 * ln_re + k.c2) * np.power(arr, k.c / ln_re)
    return float(result) if result.ndim == 0 else result


def solve_ln_re1(amplitude_a: float, k: ScalingLawConstants = NIKURADZE_CONSTANTS) -> float:
    """
    Solve c1 ln Re1 + c2 = A for ln Re1.

    Raises:
        NonPhysicalFitError: If A <= c2 (ln Re1 would not be positive).
        DomainError: If c1 == 0.
    """
    if not amplitude_a > k.c2:
        raise NonPhysicalFitError(
            f"non-physical amplitude A={amplitude_a!r}: must exceed c2={k.c2!r}", "amplitude"
        )
    if k.c1 == 0:
        raise DomainError("solve_ln_re1 is undefined for c1 == 0", k.c1)
    return (amplitude_a - k.c2) / k.c1


def solve_ln_re2(exponent_alpha: float, k: ScalingLawConstants = NIKURADZE_CONSTANTS) -> float:
    """
    Solve c / ln Re2 = alpha for ln Re2.

    Raises:
        NonPhysicalFitError: If alpha <= 0.
    """
    if not exponent_alpha > 0:
        raise NonPhysicalFitError(
            f"non-physical exponent alpha={exponent_alpha!r}: must be positive", "exponent"
        )
    return k.c / exponent_alpha


@dataclass(frozen=True)
class ScalingSolution:
    """
    Effective Reynolds number of one run.

    Attributes:
        ln_re1: ln Re from the amplitude.
        ln_re2: ln Re from the exponent.
        discrepancy_pct: 100 |ln_re1 - ln_re2| / mean(ln_re1, ln_re2).
        ln_re_eff: (ln_re1 + ln_re2) / 2.
        re_eff: exp(ln_re_eff), the geometric mean of Re1 and Re2.
        lambda_scale: Length scale nu re_eff / U [m].
        close_enough: discrepancy_pct <= threshold_pct.
        threshold_pct: The closeness threshold used.
        theta_over_lambda: theta / Lambda when the momentum thickness is known.
    """

    ln_re1: float
    ln_re2: float
    discrepancy_pct: float
    ln_re_eff: float
    re_eff: float
    lambda_scale: float
    close_enough: bool
    threshold_pct: float = DEFAULT_CLOSENESS_THRESHOLD_PCT
    theta_over_lambda: float | None = None


def effective_reynolds(
    ln_re1: float,
    ln_re2: float,
    meta: RunMetadata,
    threshold_pct: float = DEFAULT_CLOSENESS_THRESHOLD_PCT,
) -> ScalingSolution:
    """
    Combine the two ln Re estimates into an effective Reynolds number.

    Args:
        ln_re1: Estimate from the amplitude.
        ln_re2: Estimate from the exponent.
        meta: Run metadata (nu and free-stream velocity give Lambda).
        threshold_pct: Closeness threshold in percent (default 3).

    Raises:
        DomainError: If an estimate is not positive or the mean ln Re
            overflows exp().

    Example:
        >>> sol = effective_reynolds(9.9, 10.1, meta)
        >>> round(sol.discrepancy_pct, 6), sol.close_enough
        (2.0, True)
    """
    _check_ln_re(ln_re1, "effective_reynolds")
    _check_ln_re(ln_re2, "effective_reynolds")
    ln_re_eff = (ln_re1 + ln_re2) / 2
    if ln_re_eff >= MAX_LN_RE:
        raise DomainError(
            f"effective ln Re {ln_re_eff!r} is at or above {MAX_LN_RE:.6g}; Re_eff would overflow",
            ln_re_eff,
        )
    discrepancy = 100.0 * abs(ln_re1 - ln_re2) / ln_re_eff
    re_eff = math.exp(ln_re_eff)
    lambda_scale = meta.nu * re_eff / meta.u_free
    theta_over_lambda = None
    if meta.momentum_thickness is not None:
        theta_over_lambda = meta.momentum_thickness / lambda_scale
    return ScalingSolution(
        ln_re1=float(ln_re1),
        ln_re2=float(ln_re2),
        discrepancy_pct=discrepancy,
        ln_re_eff=ln_re_eff,
        re_eff=re_eff,
        lambda_scale=lambda_scale,
        close_enough=discrepancy <= threshold_pct,
        threshold_pct=threshold_pct,
        theta_over_lambda=theta_over_lambda,
    )


def solve_scaling(
    fit: PowerLawFit,
    meta: RunMetadata,
    k: ScalingLawConstants = NIKURADZE_CONSTANTS,
    threshold_pct: float = DEFAULT_CLOSENESS_THRESHOLD_PCT,
) -> ScalingSolution:
    """Solve both ln Re equations for an inner power law and combine them."""
    return effective_reynolds(
        solve_ln_re1(fit.amplitude, k), solve_ln_re2(fit.exponent, k), meta, threshold_pct
    )


def beta_correlation(
    ln_re: float, slope: float = BETA_SLOPE, intercept: float = BETA_INTERCEPT
) -> float:
    """
    Outer-region exponent correlation beta = 2 / ln Re + 0.01.

    Raises:
        DomainError: If ln_re <= 0.
    """
    return slope / _check_ln_re(ln_re, "beta_correlation") + intercept
