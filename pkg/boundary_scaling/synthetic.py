"""
Deterministic synthetic profiles.

Synthetic profiles are the oracle for the whole pipeline: a profile is drawn
from a known law on a log-spaced y+ grid, optionally with multiplicative
lognormal noise U+ * exp(sigma g), sigma = noise_pct / 100.

Random numbers are portable across platforms and numpy versions:

1. ``numpy.random.PCG64`` is seeded through ``numpy.random.SeedSequence(seed)``.
2. Each uniform is built from one raw 64-bit output r as
   u = ((r >> 11) + 0.5) * 2**-53, which lies strictly inside (0, 1).
3. Each standard normal is g = Phi^-1(u), evaluated with ``scipy.special.ndtri``.

Models:
- ScalingLawModel: U+ = (c1 ln Re + c2) (y+)^(c / ln Re)
- LogLawModel: U+ = (1/kappa) ln y+ + B
- TwoSegmentModel: A (y+)^alpha up to the breakpoint, then B2 (y+)^beta with
  B2 = A breakpoint^(alpha - beta) so the profile is continuous
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np
from numpy.typing import NDArray
from scipy.special import ndtri

from boundary_scaling.profiles import RunMetadata, VelocityProfile
from boundary_scaling.scaling import (
    NIKURADZE_CONSTANTS,
    ScalingLawConstants,
    beta_correlation,
    scaling_amplitude,
    scaling_exponent,
    scaling_law_velocity,
)

DEFAULT_NOISE_PCT = 1.0

_UNIFORM_SCALE = 2.0**-53


@dataclass(frozen=True)
class ScalingLawModel:
    """Reynolds-number-dependent scaling law at a given ln Re."""

    ln_re: float
    constants: ScalingLawConstants = NIKURADZE_CONSTANTS

    def __post_init__(self) -> None:
        if not self.ln_re > 0:
            raise ValueError(f"ln_re must be positive, got {self.ln_re!r}")

    def velocity(self, y_plus: NDArray[np.float64]) -> NDArray[np.float64]:
        return scaling_law_velocity(self.ln_re, y_plus, self.constants)


@dataclass(frozen=True)
class LogLawModel:
    """Logarithmic law with constants kappa and B."""

    kappa: float
    b: float

    def __post_init__(self) -> None:
        if not self.kappa > 0:
            raise ValueError(f"kappa must be positive, got {self.kappa!r}")

    def velocity(self, y_plus: NDArray[np.float64]) -> NDArray[np.float64]:
        return np.log(y_plus) / self.kappa + self.b


@dataclass(frozen=True)
class TwoSegmentModel:
    """
    Broken line of two power laws, continuous at the breakpoint.

    Samples with y+ <= breakpoint follow a (y+)^alpha; the others follow
    outer_amplitude (y+)^beta.
    """

    a: float
    alpha: float
    breakpoint: float
    beta: float

    def __post_init__(self) -> None:
        if not self.a > 0:
            raise ValueError(f"a must be positive, got {self.a!r}")
        if not self.breakpoint > 0:
            raise ValueError(f"breakpoint must be positive, got {self.breakpoint!r}")

    @classmethod
    def from_reynolds(
        cls,
        ln_re: float,
        breakpoint: float,
        k: ScalingLawConstants = NIKURADZE_CONSTANTS,
    ) -> TwoSegmentModel:
        """Inner scaling law at ln Re joined to an outer law with beta = 2 / ln Re + 0.01."""
        return cls(
            a=scaling_amplitude(ln_re, k),
            alpha=scaling_exponent(ln_re, k),
            breakpoint=breakpoint,
            beta=beta_correlation(ln_re),
        )

    @property
    def outer_amplitude(self) -> float:
        return self.a * self.breakpoint ** (self.alpha - self.beta)

    def velocity(self, y_plus: NDArray[np.float64]) -> NDArray[np.float64]:
        inner = self.a * np.power(y_plus, self.alpha)
        outer = self.outer_amplitude * np.power(y_plus, self.beta)
        return np.where(y_plus <= self.breakpoint, inner, outer)


Model = Union[ScalingLawModel, LogLawModel, TwoSegmentModel]


@dataclass(frozen=True)
class GridSpec:
    """Log-spaced y+ grid: count points from y_plus_lo to y_plus_hi inclusive."""

    y_plus_lo: float = 100.0
    y_plus_hi: float = 5000.0
    count: int = 40

    def __post_init__(self) -> None:
        if self.count < 10:
            raise ValueError(f"grid count must be at least 10, got {self.count}")
        if not 0 < self.y_plus_lo < self.y_plus_hi:
            raise ValueError(
                f"grid range must be positive and increasing, got "
                f"[{self.y_plus_lo!r}, {self.y_plus_hi!r}]"
            )

    def nodes(self) -> NDArray[np.float64]:
        return np.geomspace(self.y_plus_lo, self.y_plus_hi, self.count)


def default_metadata() -> RunMetadata:
    return RunMetadata(re_theta=20000.0, u_free=15.0, u_tau=0.5, nu=1.5e-5, label="synthetic")


@dataclass(frozen=True)
class GeneratorSpec:
    """
    Everything needed to draw one synthetic profile.

    Attributes:
        model: The generating law.
        grid: The y+ grid.
        noise_pct: Relative noise amplitude in percent (1.0 means sigma = 0.01).
        seed: Seed of the PCG64 generator (unsigned 64-bit).
        meta: Metadata attached to the profile.
    """

    model: Model
    grid: GridSpec = field(default_factory=GridSpec)
    noise_pct: float = 0.0
    seed: int = 0
    meta: RunMetadata = field(default_factory=default_metadata)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.noise_pct) and self.noise_pct >= 0):
            raise ValueError(f"noise_pct must be non-negative, got {self.noise_pct!r}")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")


def standard_normals(seed: int, count: int) -> NDArray[np.float64]:
    """
    Draw count standard normal deviates from the documented seeded stream.

    Example:
        >>> standard_normals(42, 3).shape
        (3,)
    """
    bit_generator = np.random.PCG64(np.random.SeedSequence(seed))
    raw = np.asarray(bit_generator.random_raw(count), dtype=np.uint64)
    uniforms = ((raw >> np.uint64(11)).astype(np.float64) + 0.5) * _UNIFORM_SCALE
    return ndtri(uniforms)


def generate(spec: GeneratorSpec) -> VelocityProfile:
    """
    Draw a synthetic profile.

    The result is a pure function of spec: equal specs give bit-identical
    profiles, and the seed is unused when noise_pct is 0.

    Example:
        >>> spec = GeneratorSpec(ScalingLawModel(ln_re=9.0), noise_pct=1.0, seed=42)
        >>> profile = generate(spec)
    """
    y_plus = spec.grid.nodes()
    u_plus = spec.model.velocity(y_plus)
    if spec.noise_pct > 0:
        sigma = spec.noise_pct / 100.0
        u_plus = u_plus * np.exp(sigma * standard_normals(spec.seed, y_plus.size))
    return VelocityProfile.from_wall_units(spec.meta, y_plus, u_plus)
