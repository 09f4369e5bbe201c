"""
Velocity profile data types.

A velocity profile is one run of a boundary-layer experiment reduced to wall
units:
- y_plus: dimensionless wall distance, y+ = u* y / nu
- u_plus: dimensionless mean velocity, U+ = u / u*

plus the run metadata needed to leave wall units again (free-stream velocity,
friction velocity, viscosity) and the momentum-thickness Reynolds number that
keys the run.

All types are frozen; a constructed profile always satisfies its invariants.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from numpy.typing import ArrayLike, NDArray

from boundary_scaling.exceptions import ProfileValidationError

# Two segments of at least 3 points each plus a few sublayer points
MIN_PROFILE_POINTS = 10

# Relative tolerance for re_theta against U * theta / nu
RE_THETA_CONSISTENCY_TOL = 1e-6


def _positive_finite(value: float, name: str, invariant: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0:
        raise ProfileValidationError(f"{name} must be a positive finite number, got {value!r}", invariant)
    return value


@dataclass(frozen=True)
class ProfilePoint:
    """
    One sample of a mean-velocity profile in wall units.

    Attributes:
        y_plus: Dimensionless wall distance (eta = u* y / nu).
        u_plus: Dimensionless mean velocity (phi = u / u*).
    """

    y_plus: float
    u_plus: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "y_plus", _positive_finite(self.y_plus, "y_plus", "y_plus > 0"))
        object.__setattr__(self, "u_plus", _positive_finite(self.u_plus, "u_plus", "u_plus > 0"))


@dataclass(frozen=True)
class RunMetadata:
    """
    Parameters of one experimental run.

    Attributes:
        re_theta: Momentum-thickness Reynolds number U theta / nu.
        u_free: Free-stream velocity U [m/s].
        u_tau: Friction velocity u* [m/s].
        nu: Kinematic viscosity [m^2/s].
        label: Run identifier; a single line without surrounding whitespace.
        momentum_thickness: Optional momentum thickness theta [m]. When present,
            re_theta must agree with U theta / nu to a relative 1e-6.

    Example:
        >>> meta = RunMetadata(re_theta=20000, u_free=15.0, u_tau=0.5, nu=1.5e-5, label="run01")
    """

    re_theta: float
    u_free: float
    u_tau: float
    nu: float
    label: str = "unnamed"
    momentum_thickness: float | None = None

    def __post_init__(self) -> None:
        for name in ("re_theta", "u_free", "u_tau", "nu"):
            value = _positive_finite(getattr(self, name), name, f"{name} > 0")
            object.__setattr__(self, name, value)
        if not isinstance(self.label, str):
            raise TypeError(f"label must be a string, got {type(self.label).__name__}")
        # Labels are written verbatim into one header line of the canonical format
        if not self.label or self.label != self.label.strip() or any(c in self.label for c in "\r\n"):
            raise ProfileValidationError(
                f"label {self.label!r} must be non-empty, single-line and without surrounding whitespace",
                "label is a stripped single line",
            )
        if self.momentum_thickness is not None:
            theta = _positive_finite(
                self.momentum_thickness, "momentum_thickness", "momentum_thickness > 0"
            )
            object.__setattr__(self, "momentum_thickness", theta)
            derived = self.u_free * theta / self.nu
            if abs(self.re_theta - derived) / self.re_theta >= RE_THETA_CONSISTENCY_TOL:
                raise ProfileValidationError(
                    f"re_theta={self.re_theta!r} disagrees with U*theta/nu={derived!r}",
                    "re_theta == U*theta/nu",
                )


@dataclass(frozen=True)
class VelocityProfile:
    """
    A run's mean-velocity samples in wall units.

    Points are strictly increasing in y_plus and there are at least
    ``MIN_PROFILE_POINTS`` of them.

    Attributes:
        meta: The run metadata.
        points: Ordered samples.

    Example:
        >>> profile = VelocityProfile.from_wall_units(meta, y_plus, u_plus)
        >>> profile.y_plus.max()
    """

    meta: RunMetadata
    points: tuple[ProfilePoint, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        points = tuple(self.points)
        object.__setattr__(self, "points", points)
        if len(points) < MIN_PROFILE_POINTS:
            raise ProfileValidationError(
                f"profile '{self.meta.label}' has {len(points)} points, "
                f"at least {MIN_PROFILE_POINTS} required",
                f"at least {MIN_PROFILE_POINTS} points",
            )
        for prev, cur in zip(points, points[1:]):
            if cur.y_plus <= prev.y_plus:
                raise ProfileValidationError(
                    f"profile '{self.meta.label}' y_plus not strictly increasing at "
                    f"{prev.y_plus!r} -> {cur.y_plus!r}",
                    "y_plus strictly increasing",
                )

    @classmethod
    def from_wall_units(
        cls, meta: RunMetadata, y_plus: ArrayLike, u_plus: ArrayLike
    ) -> VelocityProfile:
        """Build a profile from wall-unit columns."""
        ys = np.asarray(y_plus, dtype=float).ravel()
        us = np.asarray(u_plus, dtype=float).ravel()
        if ys.shape != us.shape:
            raise ProfileValidationError(
                f"column lengths differ: {ys.size} y_plus vs {us.size} u_plus",
                "equal column lengths",
            )
        return cls(meta, tuple(ProfilePoint(float(y), float(u)) for y, u in zip(ys, us)))

    @classmethod
    def from_dimensional(cls, meta: RunMetadata, y: ArrayLike, u: ArrayLike) -> VelocityProfile:
        """
        Build a profile from dimensional columns.

        Args:
            meta: Run metadata supplying u_tau and nu.
            y: Wall distances [m].
            u: Mean velocities [m/s].
        """
        ys = np.asarray(y, dtype=float).ravel()
        us = np.asarray(u, dtype=float).ravel()
        return cls.from_wall_units(meta, ys * meta.u_tau / meta.nu, us / meta.u_tau)

    @classmethod
    def from_points(cls, meta: RunMetadata, points: Iterable[Sequence[float]]) -> VelocityProfile:
        """Build a profile from (y_plus, u_plus) pairs."""
        return cls(meta, tuple(ProfilePoint(float(y), float(u)) for y, u in points))

    @cached_property
    def y_plus(self) -> NDArray[np.float64]:
        """Read-only array of y+ values."""
        arr = np.fromiter((p.y_plus for p in self.points), dtype=float, count=len(self.points))
        arr.flags.writeable = False
        return arr

    @cached_property
    def u_plus(self) -> NDArray[np.float64]:
        """Read-only array of U+ values."""
        arr = np.fromiter((p.u_plus for p in self.points), dtype=float, count=len(self.points))
        arr.flags.writeable = False
        return arr

    @property
    def label(self) -> str:
        return self.meta.label

    def __len__(self) -> int:
        return len(self.points)

    def window_mask(self, lo: float, hi: float) -> NDArray[np.bool_]:
        """Boolean mask of points with lo <= y+ <= hi."""
        return (self.y_plus >= lo) & (self.y_plus <= hi)

    def window(self, lo: float, hi: float) -> tuple[ProfilePoint, ...]:
        """Return the points with lo <= y+ <= hi."""
        return tuple(p for p in self.points if lo <= p.y_plus <= hi)

    def in_window(self, lo: float, hi: float) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        """Return (y+, U+) arrays restricted to the closed window [lo, hi]."""
        mask = self.window_mask(lo, hi)
        return self.y_plus[mask], self.u_plus[mask]

    def scaled(self, factor: float) -> VelocityProfile:
        """Return a copy with every U+ multiplied by a positive factor."""
        if not factor > 0:
            raise ProfileValidationError(f"scale factor must be positive, got {factor!r}", "u_plus > 0")
        return VelocityProfile.from_wall_units(self.meta, self.y_plus, self.u_plus * factor)
