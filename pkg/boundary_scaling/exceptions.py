"""
Error hierarchy for boundary-scaling.

Every error raised on purpose by the package derives from
:class:`BoundaryScalingError`. Errors about bad values also derive from
``ValueError`` so that generic callers can keep catching ``ValueError``.
"""

from __future__ import annotations

from collections.abc import Sequence


class BoundaryScalingError(Exception):
    """Base class for all boundary-scaling errors."""


class DomainError(BoundaryScalingError, ValueError):
    """An argument lies outside the domain of a law (e.g. y+ <= 0 under a logarithm)."""

    def __init__(self, message: str, value: float | None = None) -> None:
        super().__init__(message)
        self.value = value


class ProfileValidationError(BoundaryScalingError, ValueError):
    """A profile-model invariant is violated."""

    def __init__(self, message: str, invariant: str) -> None:
        super().__init__(f"{message} (invariant: {invariant})")
        self.invariant = invariant


class ProfileParseError(BoundaryScalingError, ValueError):
    """A profile file contains a malformed line."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"{message}, line {line}")
        self.line = line


class MissingMetadataError(BoundaryScalingError, ValueError):
    """Required run metadata keys are absent."""

    def __init__(self, missing: Sequence[str]) -> None:
        self.missing = tuple(missing)
        super().__init__(f"missing metadata keys: {', '.join(self.missing)}")


class DegenerateInputError(BoundaryScalingError, ValueError):
    """Least-squares input cannot determine a line."""


class InsufficientPointsError(BoundaryScalingError, ValueError):
    """A fit window holds fewer points than the fit needs."""

    def __init__(self, window: tuple[float, float], n_points: int, required: int = 3) -> None:
        lo, hi = window
        super().__init__(
            f"window y+ in [{lo:g}, {hi:g}] contains {n_points} points, at least {required} required"
        )
        self.window = window
        self.n_points = n_points


class NonPhysicalFitError(BoundaryScalingError, ValueError):
    """A fitted or supplied quantity has no physical interpretation."""

    def __init__(self, message: str, quantity: str) -> None:
        super().__init__(message)
        self.quantity = quantity


class NoValidBreakpointError(BoundaryScalingError, ValueError):
    """No breakpoint candidate leaves enough points on both sides."""

    def __init__(self, search_lo: float, search_hi: float, sublayer_cutoff: float) -> None:
        super().__init__(
            f"no valid breakpoint in y+ [{search_lo:g}, {search_hi:g}] "
            f"with sublayer cutoff {sublayer_cutoff:g}"
        )
        self.search_range = (search_lo, search_hi)
        self.sublayer_cutoff = sublayer_cutoff


class StageError(BoundaryScalingError, RuntimeError):
    """A pipeline stage failed for one run."""

    def __init__(self, label: str, stage: str, cause: BaseException) -> None:
        super().__init__(f"[{label}] {stage}: {cause}")
        self.label = label
        self.stage = stage
        self.cause = cause


class OutputWriteError(BoundaryScalingError, OSError):
    """An output file could not be written."""

    def __init__(self, path: str, cause: BaseException) -> None:
        super().__init__(f"cannot write {path}: {cause}")
        self.path = path
        self.cause = cause
