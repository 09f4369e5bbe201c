"""Tests for profile data types and fitted-law evaluators."""

import logging
import math

import numpy as np
import pytest

from boundary_scaling.exceptions import DomainError, ProfileValidationError
from boundary_scaling.profiles import (
    MIN_PROFILE_POINTS,
    LogLawFit,
    PowerLawFit,
    ProfilePoint,
    RunMetadata,
    SegmentedFit,
    VelocityProfile,
    evaluate_log_law,
    evaluate_power_law,
)


class TestProfilePoint:
    """Tests for ProfilePoint validation."""

    def test_valid_point(self):
        """Positive finite coordinates are accepted."""
        p = ProfilePoint(100.0, 15.2)
        assert p.y_plus == 100.0
        assert p.u_plus == 15.2

    @pytest.mark.parametrize("y_plus", [0.0, -1.0, math.inf, math.nan])
    def test_invalid_y_plus(self, y_plus):
        """Non-positive or non-finite y+ is rejected."""
        with pytest.raises(ProfileValidationError, match="y_plus must be a positive finite number"):
            ProfilePoint(y_plus, 10.0)

    def test_invalid_u_plus_names_invariant(self):
        """The error carries the violated invariant."""
        with pytest.raises(ProfileValidationError) as excinfo:
            ProfilePoint(10.0, 0.0)
        assert excinfo.value.invariant == "u_plus > 0"

    def test_frozen(self):
        """Points are immutable."""
        p = ProfilePoint(1.0, 2.0)
        with pytest.raises(AttributeError):
            p.y_plus = 3.0


class TestRunMetadata:
    """Tests for RunMetadata validation."""

    def test_defaults(self):
        """Label defaults to 'unnamed' and theta to None."""
        meta = RunMetadata(re_theta=20000, u_free=15.0, u_tau=0.5, nu=1.5e-5)
        assert meta.label == "unnamed"
        assert meta.momentum_thickness is None

    @pytest.mark.parametrize("field", ["re_theta", "u_free", "u_tau", "nu"])
    def test_non_positive_fields_rejected(self, field):
        """Each physical quantity must be positive."""
        kwargs = {"re_theta": 20000.0, "u_free": 15.0, "u_tau": 0.5, "nu": 1.5e-5}
        kwargs[field] = 0.0
        with pytest.raises(ProfileValidationError, match=field):
            RunMetadata(**kwargs)

    def test_consistent_momentum_thickness(self):
        """re_theta equal to U theta / nu is accepted."""
        theta = 0.02
        meta = RunMetadata(
            re_theta=15.0 * theta / 1.5e-5, u_free=15.0, u_tau=0.5, nu=1.5e-5, momentum_thickness=theta
        )
        assert meta.momentum_thickness == theta

    def test_inconsistent_momentum_thickness(self):
        """re_theta disagreeing with U theta / nu is rejected."""
        with pytest.raises(ProfileValidationError, match="disagrees"):
            RunMetadata(re_theta=20000.0, u_free=15.0, u_tau=0.5, nu=1.5e-5, momentum_thickness=0.01)

    def test_label_must_be_string(self):
        """A non-string label is a type error."""
        with pytest.raises(TypeError):
            RunMetadata(re_theta=1.0, u_free=1.0, u_tau=1.0, nu=1.0, label=3)

    @pytest.mark.parametrize("label", ["", " run 7 ", "run7 ", "\trun7", "a\nb", "a\r\nb"])
    def test_label_must_be_stripped_single_line(self, label):
        """Labels that the file header could not carry verbatim are rejected."""
        with pytest.raises(ProfileValidationError, match="label"):
            RunMetadata(re_theta=1.0, u_free=1.0, u_tau=1.0, nu=1.0, label=label)

    def test_label_with_inner_spaces_accepted(self):
        """Whitespace inside a label is kept."""
        meta = RunMetadata(re_theta=1.0, u_free=1.0, u_tau=1.0, nu=1.0, label="run 7 (tripped)")
        assert meta.label == "run 7 (tripped)"


class TestVelocityProfile:
    """Tests for VelocityProfile construction and views."""

    def test_from_wall_units(self, meta):
        """Columns become ordered points and read-only arrays."""
        ys = np.geomspace(100, 1000, 12)
        profile = VelocityProfile.from_wall_units(meta, ys, 2 * ys)
        assert len(profile) == 12
        assert np.array_equal(profile.y_plus, ys)
        assert not profile.y_plus.flags.writeable
        assert profile.label == "run01"

    def test_too_few_points(self, meta):
        """Fewer than the minimum number of points is rejected."""
        ys = np.arange(1, MIN_PROFILE_POINTS)
        with pytest.raises(ProfileValidationError, match="at least 10 points"):
            VelocityProfile.from_wall_units(meta, ys, ys)

    def test_non_increasing_y_plus(self, meta):
        """Duplicated y+ values are rejected."""
        ys = [1, 2, 3, 4, 5, 5, 6, 7, 8, 9, 10]
        with pytest.raises(ProfileValidationError, match="strictly increasing"):
            VelocityProfile.from_wall_units(meta, ys, ys)

    def test_mismatched_columns(self, meta):
        """Columns of different lengths are rejected."""
        with pytest.raises(ProfileValidationError, match="column lengths differ"):
            VelocityProfile.from_wall_units(meta, np.arange(1, 12), np.arange(1, 11))

    def test_from_dimensional(self, meta):
        """y and u convert to y+ = u* y / nu and U+ = u / u*."""
        y = np.linspace(0.003, 0.03, 10)
        u = np.linspace(7.0, 12.0, 10)
        profile = VelocityProfile.from_dimensional(meta, y, u)
        assert profile.y_plus == pytest.approx(y * 0.5 / 1.5e-5)
        assert profile.u_plus == pytest.approx(u / 0.5)

    def test_window_is_closed(self, meta):
        """window and in_window include both bounds."""
        ys = np.arange(100.0, 1200.0, 100.0)
        profile = VelocityProfile.from_wall_units(meta, ys, ys / 10)
        points = profile.window(200.0, 400.0)
        assert [p.y_plus for p in points] == [200.0, 300.0, 400.0]
        y_in, u_in = profile.in_window(200.0, 400.0)
        assert list(y_in) == [200.0, 300.0, 400.0]
        assert list(u_in) == [20.0, 30.0, 40.0]

    def test_scaled(self, power_profile):
        """scaled multiplies every U+ and keeps y+."""
        doubled = power_profile.scaled(2.0)
        assert doubled.u_plus == pytest.approx(2 * power_profile.u_plus)
        assert np.array_equal(doubled.y_plus, power_profile.y_plus)

    def test_scaled_rejects_non_positive(self, power_profile):
        """A non-positive scale factor is rejected."""
        with pytest.raises(ProfileValidationError):
            power_profile.scaled(0.0)


class TestFits:
    """Tests for fit result types."""

    def test_power_law_requires_positive_amplitude(self):
        """amplitude must be positive."""
        with pytest.raises(ProfileValidationError, match="amplitude"):
            PowerLawFit(amplitude=-1.0, exponent=0.1)

    def test_r_squared_range(self):
        """r_squared outside [0, 1] is rejected."""
        with pytest.raises(ProfileValidationError, match="r_squared"):
            PowerLawFit(amplitude=1.0, exponent=0.1, r_squared=1.5)

    def test_n_points_minimum(self):
        """n_points below 3 is rejected."""
        with pytest.raises(ProfileValidationError, match="n_points"):
            LogLawFit(kappa=0.4, intercept_b=5.0, n_points=2)

    def test_empty_window(self):
        """window.lo must be below window.hi."""
        with pytest.raises(ProfileValidationError, match="window"):
            LogLawFit(kappa=0.4, intercept_b=5.0, window=(10.0, 10.0))

    def test_segmented_window_order(self):
        """The breakpoint must lie between the region windows."""
        r1 = PowerLawFit(8.0, 0.16, window=(100.0, 500.0))
        r2 = PowerLawFit(11.6, 0.10, window=(500.0, 5000.0))
        with pytest.raises(ProfileValidationError, match="breakpoint"):
            SegmentedFit(breakpoint_y_plus=700.0, region1=r1, region2=r2, total_sse=0.0)

    def test_segmented_slope_order_is_logged(self, caplog):
        """An outer exponent above the inner one is logged at INFO, not raised."""
        caplog.set_level(logging.INFO, logger="boundary_scaling.profiles.fits")
        r1 = PowerLawFit(8.0, 0.10, window=(100.0, 500.0))
        r2 = PowerLawFit(5.0, 0.20, window=(500.0, 5000.0))
        seg = SegmentedFit(breakpoint_y_plus=500.0, region1=r1, region2=r2, total_sse=0.0)
        assert seg.breakpoint_y_plus == 500.0
        assert any(r.levelname == "INFO" and "exceeds" in r.getMessage() for r in caplog.records)
        assert not any(r.levelno >= logging.WARNING for r in caplog.records)


class TestEvaluators:
    """Tests for evaluate_power_law and evaluate_log_law."""

    def test_power_law_at_one(self):
        """A (1)^alpha = A."""
        assert evaluate_power_law(PowerLawFit(amplitude=8.5, exponent=0.14), 1.0) == 8.5

    def test_power_law_value(self):
        """A power law evaluates as A (y+)^alpha."""
        value = evaluate_power_law(PowerLawFit(amplitude=8.5, exponent=0.14), 1000.0)
        assert value == pytest.approx(8.5 * 1000**0.14)

    def test_log_law_value(self):
        """ln(1000) / 0.38 + 4.1 is about 22.28."""
        fit = LogLawFit(kappa=0.38, intercept_b=4.1)
        assert evaluate_log_law(fit, 1000.0) == pytest.approx(22.278, abs=1e-3)

    @pytest.mark.parametrize("amplitude,exponent", [(8.5, 0.14), (7.6962, 1 / 6), (0.3, 1.2), (2.0, -0.5)])
    @pytest.mark.parametrize("y1,y2", [(2.0, 3.0), (10.0, 250.0), (0.5, 1e4)])
    def test_power_law_is_multiplicative(self, amplitude, exponent, y1, y2):
        """f(y1 y2) f(1) equals f(y1) f(y2)."""
        fit = PowerLawFit(amplitude=amplitude, exponent=exponent)
        lhs = evaluate_power_law(fit, y1 * y2) * evaluate_power_law(fit, 1.0)
        rhs = evaluate_power_law(fit, y1) * evaluate_power_law(fit, y2)
        assert lhs == pytest.approx(rhs, rel=1e-12)

    @pytest.mark.parametrize("kappa,intercept_b", [(0.41, 5.0), (0.38, 4.1), (0.4, -1.5)])
    def test_log_law_at_one_is_intercept(self, kappa, intercept_b):
        """At y+ = 1 the log law returns B exactly."""
        assert evaluate_log_law(LogLawFit(kappa=kappa, intercept_b=intercept_b), 1.0) == intercept_b

    @pytest.mark.parametrize(
        "amplitude,exponent,y_plus,expected,tol",
        [
            (1.0, 0.0, 50.0, 1.0, 0.0),
            (7.6962, 1 / 6, 1000.0, 24.35, 0.02),
        ],
    )
    def test_power_law_reference_values(self, amplitude, exponent, y_plus, expected, tol):
        """A constant law and the scaling law at ln Re = 9, evaluated at fixed y+."""
        fit = PowerLawFit(amplitude=amplitude, exponent=exponent)
        assert evaluate_power_law(fit, y_plus) == pytest.approx(expected, abs=tol)

    def test_log_law_at_e_to_the_fourth(self):
        """kappa = 0.40 and B = 5.1 give 15.1 at y+ = e^4."""
        fit = LogLawFit(kappa=0.40, intercept_b=5.1)
        assert evaluate_log_law(fit, math.exp(4.0)) == pytest.approx(15.1, rel=1e-12)

    def test_arrays(self):
        """Evaluators accept arrays."""
        fit = PowerLawFit(amplitude=2.0, exponent=0.5)
        assert evaluate_power_law(fit, np.array([1.0, 4.0])) == pytest.approx([2.0, 4.0])

    @pytest.mark.parametrize("y_plus", [0.0, -1.0])
    def test_domain_error(self, y_plus):
        """y+ <= 0 is outside both laws' domain."""
        with pytest.raises(DomainError):
            evaluate_power_law(PowerLawFit(amplitude=1.0, exponent=0.1), y_plus)
        with pytest.raises(DomainError):
            evaluate_log_law(LogLawFit(kappa=0.4, intercept_b=5.0), y_plus)
