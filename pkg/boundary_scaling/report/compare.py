"""
Power law against log law over region I.

SSEs of the two models live in different coordinates (log-log for the power
law, semi-log for the log law), so the preferred model is chosen by the RMS
of the U+ prediction error in linear coordinates. The fitted log law is also
set against the classical constant pairs of the literature.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from boundary_scaling.profiles import LogLawFit, evaluate_log_law
from boundary_scaling.report.analysis import RunAnalysis


@dataclass(frozen=True)
class LogLawConstants:
    """A published (kappa, B) pair."""

    name: str
    kappa: float
    b: float

    def as_fit(self, window: tuple[float, float]) -> LogLawFit:
        return LogLawFit(kappa=self.kappa, intercept_b=self.b, window=window)


LITERATURE_LOG_LAWS: tuple[LogLawConstants, ...] = (
    LogLawConstants("nikuradze", 0.417, 5.84),
    LogLawConstants("monin_yaglom", 0.40, 5.1),
    LogLawConstants("schlichting", 0.40, 5.5),
    LogLawConstants("thesis", 0.38, 4.1),
)

POWER = "power"
LOG = "log"


@dataclass(frozen=True)
class ModelComparison:
    """
    One run's model comparison over region I.

    Attributes:
        label: Run label.
        re_theta: Momentum-thickness Reynolds number.
        rms_power: RMS U+ error of the fitted power law.
        rms_loglaw: RMS U+ error of the fitted log law.
        preferred: "power" or "log", by the smaller RMS.
        kappa_fit: Fitted kappa.
        b_fit: Fitted B.
        rms_literature: RMS U+ error of each literature log law, by name.
    """

    label: str
    re_theta: float
    rms_power: float
    rms_loglaw: float
    preferred: str
    kappa_fit: float
    b_fit: float
    rms_literature: dict[str, float]

    def to_dict(self) -> dict[str, object]:
        """Return a flat dict with one ``rms_<name>`` column per literature law."""
        row: dict[str, object] = {
            "label": self.label,
            "re_theta": self.re_theta,
            "rms_power": self.rms_power,
            "rms_loglaw": self.rms_loglaw,
            "preferred": self.preferred,
            "kappa_fit": self.kappa_fit,
            "b_fit": self.b_fit,
        }
        row.update({f"rms_{name}": value for name, value in self.rms_literature.items()})
        return row


def compare_models(
    analysis: RunAnalysis,
    literature: Sequence[LogLawConstants] = LITERATURE_LOG_LAWS,
) -> ModelComparison:
    """Compare the power law and log law fitted to a run's region I."""
    region1 = analysis.segmented.region1
    ys, us = analysis.profile.in_window(*region1.window)
    rms_literature = {
        ref.name: float(np.sqrt(np.mean((us - evaluate_log_law(ref.as_fit(region1.window), ys)) ** 2)))
        for ref in literature
    }
    preferred = POWER if region1.rms_linear <= analysis.log_law.rms_linear else LOG
    return ModelComparison(
        label=analysis.label,
        re_theta=analysis.profile.meta.re_theta,
        rms_power=region1.rms_linear,
        rms_loglaw=analysis.log_law.rms_linear,
        preferred=preferred,
        kappa_fit=analysis.log_law.kappa,
        b_fit=analysis.log_law.intercept_b,
        rms_literature=rms_literature,
    )


def compare_batch(
    analyses: Sequence[RunAnalysis],
    literature: Sequence[LogLawConstants] = LITERATURE_LOG_LAWS,
) -> list[ModelComparison]:
    """Compare models for every run, in input order."""
    return [compare_models(a, literature) for a in analyses]
