"""Pytest configuration and shared profile fixtures for boundary-scaling tests."""

from __future__ import annotations

import logging

import numpy as np
import pytest

from boundary_scaling.profiles import RunMetadata, VelocityProfile
from boundary_scaling.synthetic import (
    GeneratorSpec,
    GridSpec,
    ScalingLawModel,
    TwoSegmentModel,
    generate,
)


@pytest.fixture(autouse=True)
def quiet_package_logs(caplog):
    """Capture package logs at DEBUG so every log statement is exercised."""
    caplog.set_level(logging.DEBUG, logger="boundary_scaling")
    yield


@pytest.fixture
def meta():
    """Metadata of a typical high-Re_theta run."""
    return RunMetadata(re_theta=20000.0, u_free=15.0, u_tau=0.5, nu=1.5e-5, label="run01")


@pytest.fixture
def make_profile(meta):
    """Factory building a wall-unit profile from y+ and a U+ function or array."""

    def _make(y_plus, u_plus, label="run01", re_theta=20000.0):
        ys = np.asarray(y_plus, dtype=float)
        us = u_plus(ys) if callable(u_plus) else np.asarray(u_plus, dtype=float)
        run_meta = RunMetadata(
            re_theta=re_theta, u_free=meta.u_free, u_tau=meta.u_tau, nu=meta.nu, label=label
        )
        return VelocityProfile.from_wall_units(run_meta, ys, us)

    return _make


@pytest.fixture
def power_profile(make_profile):
    """Noiseless U+ = 8.5 (y+)^0.14 on 40 log-spaced points in [100, 5000]."""
    return make_profile(np.geomspace(100, 5000, 40), lambda y: 8.5 * y**0.14)


@pytest.fixture
def scaling_profile():
    """Noiseless scaling-law profile at ln Re = 10."""
    return generate(GeneratorSpec(ScalingLawModel(ln_re=10.0)))


@pytest.fixture
def broken_profile():
    """Noiseless two-segment profile at ln Re = 10 with the break on a grid node."""
    grid = GridSpec(100.0, 10000.0, 61)
    return generate(
        GeneratorSpec(TwoSegmentModel.from_reynolds(10.0, breakpoint=1000.0), grid=grid)
    )


@pytest.fixture
def synthetic_run():
    """Factory for noisy two-segment runs keyed by ln Re and seed."""

    def _make(ln_re, seed=0, noise_pct=1.0, label=None, re_theta=20000.0, count=61, hi=10000.0):
        meta = RunMetadata(
            re_theta=re_theta, u_free=15.0, u_tau=0.5, nu=1.5e-5,
            label=label or f"ln_re_{ln_re:.3f}_s{seed}",
        )
        spec = GeneratorSpec(
            TwoSegmentModel.from_reynolds(ln_re, breakpoint=1000.0),
            grid=GridSpec(100.0, hi, count),
            noise_pct=noise_pct,
            seed=seed,
            meta=meta,
        )
        return generate(spec)

    return _make
