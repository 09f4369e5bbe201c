"""Tests for the per-run pipeline, batch summaries and model comparison."""

import dataclasses

import numpy as np
import pytest

from boundary_scaling.exceptions import NoValidBreakpointError, StageError
from boundary_scaling.ingest import write_profile_file
from boundary_scaling.report import (
    REPORT_COLUMNS,
    AnalysisConfig,
    analyze_batch,
    analyze_profile,
    analyze_profiles,
    analyze_run,
    compare_batch,
    compare_models,
)
from boundary_scaling.report.analysis import EXIT_OK, EXIT_PARTIAL_FAILURE, EXIT_TOTAL_FAILURE
from boundary_scaling.synthetic import GeneratorSpec, LogLawModel, generate


class TestAnalysisConfig:
    """Tests for AnalysisConfig validation."""

    def test_defaults(self):
        """Defaults are cutoff 100, search from 150, threshold 3% and split 15000."""
        config = AnalysisConfig()
        assert config.sublayer_cutoff == 100.0
        assert config.breakpoint_range == (150.0, None)
        assert config.closeness_threshold_pct == 3.0
        assert config.re_theta_split == 15000.0

    @pytest.mark.parametrize("cutoff", [50.0, 250.0])
    def test_cutoff_range(self, cutoff):
        """The sublayer cutoff must lie in [70, 200]."""
        with pytest.raises(ValueError, match="sublayer_cutoff"):
            AnalysisConfig(sublayer_cutoff=cutoff)

    @pytest.mark.parametrize("search", [(0.0, None), (500.0, 400.0)])
    def test_breakpoint_range(self, search):
        """The search range must be positive and non-empty."""
        with pytest.raises(ValueError, match="breakpoint range"):
            AnalysisConfig(breakpoint_range=search)

    def test_threshold_and_workers(self):
        """The threshold must be positive and the pool non-empty."""
        with pytest.raises(ValueError, match="closeness_threshold_pct"):
            AnalysisConfig(closeness_threshold_pct=0.0)
        with pytest.raises(ValueError, match="max_workers"):
            AnalysisConfig(max_workers=0)

    def test_input_format_coerced(self):
        """Format names are coerced to ProfileFormat."""
        assert AnalysisConfig(input_format="whitespace_table").input_format.value == "whitespace_table"


class TestAnalyzeRun:
    """Tests for analyze_run and analyze_profile."""

    def test_scaling_law_run(self, scaling_profile):
        """A noiseless scaling-law run returns ln Re 10 from both equations."""
        report = analyze_run(scaling_profile)
        assert report.ln_re1 == pytest.approx(10.0, rel=1e-9)
        assert report.ln_re2 == pytest.approx(10.0, rel=1e-9)
        assert report.discrepancy_pct == pytest.approx(0.0, abs=1e-7)
        assert report.close_enough
        assert report.sse_power_region1 < 1e-20
        assert report.sse_power_region1 < report.sse_loglaw_region1
        assert report.rms_power_region1 < report.rms_loglaw_region1

    def test_log_law_run(self):
        """A noiseless log-law run with kappa 0.38 and B 4.1 prefers the log law."""
        profile = generate(GeneratorSpec(LogLawModel(kappa=0.38, b=4.1)))
        report = analyze_run(profile)
        assert report.kappa_fit == pytest.approx(0.38, abs=1e-9)
        assert report.b_fit == pytest.approx(4.1, abs=1e-8)
        assert report.sse_loglaw_region1 < 1e-18
        assert report.sse_loglaw_region1 < report.sse_power_region1
        assert report.rms_loglaw_region1 < report.rms_power_region1

    def test_report_columns(self, broken_profile):
        """A report is a mapping over the documented columns."""
        report = analyze_run(broken_profile)
        assert tuple(report) == REPORT_COLUMNS
        assert list(report.to_dict()) == list(REPORT_COLUMNS)
        assert report["label"] == broken_profile.label
        assert report.re_theta == broken_profile.meta.re_theta
        with pytest.raises(KeyError):
            report["unknown"]

    def test_broken_profile_fields(self, broken_profile):
        """Both regions and the breakpoint are reported."""
        report = analyze_run(broken_profile)
        assert report.breakpoint_y_plus == pytest.approx(1000.0, rel=1e-12)
        assert report.alpha == pytest.approx(0.15, abs=1e-10)
        assert report.beta == pytest.approx(0.21, abs=1e-10)
        # the breakpoint sample sees both slopes
        assert 0.15 < report.gamma_mean < 0.16
        assert report.theta_over_lambda is None

    def test_intermediates_kept(self, broken_profile):
        """analyze_profile keeps the fits and collapse points of region I."""
        analysis = analyze_profile(broken_profile)
        region1 = analysis.segmented.region1
        assert len(analysis.collapse_points) == region1.n_points
        assert analysis.log_law.window == region1.window
        assert analysis.gamma.window == region1.window
        assert max(abs(p.deviation) for p in analysis.collapse_points) < 1e-8

    def test_all_points_below_cutoff(self, make_profile):
        """A profile below the sublayer cutoff fails in segmentation."""
        profile = make_profile(np.geomspace(10, 90, 15), lambda y: 8 * y**0.15, label="wall")
        with pytest.raises(StageError, match="segmentation: no valid breakpoint") as excinfo:
            analyze_run(profile)
        assert excinfo.value.label == "wall"
        assert excinfo.value.stage == "segmentation"
        assert isinstance(excinfo.value.__cause__, NoValidBreakpointError)

    def test_scaling_stage_failure(self, make_profile):
        """A decreasing region I has no physical kappa."""
        ys = np.geomspace(100, 5000, 30)
        profile = make_profile(ys, lambda y: 100.0 * y**-0.1, label="falling")
        with pytest.raises(StageError) as excinfo:
            analyze_run(profile)
        assert excinfo.value.stage == "log_law"

    def test_far_run_is_logged(self, synthetic_run, caplog):
        """A run outside the closeness threshold logs a warning."""
        report = analyze_run(synthetic_run(10.0, seed=5), AnalysisConfig(closeness_threshold_pct=1e-6))
        assert not report.close_enough
        assert any(
            r.levelname == "WARNING" and "differ by" in r.getMessage() for r in caplog.records
        )

    def test_independent_of_batch(self, synthetic_run):
        """A run's report does not depend on the other batch members."""
        run = synthetic_run(10.3, seed=4)
        alone = analyze_run(run)
        summary = analyze_profiles([synthetic_run(9.0, seed=1), run, synthetic_run(11.0, seed=2)])
        assert summary.reports[1] == alone


class TestAnalyzeProfiles:
    """Tests for in-memory batches."""

    def test_beta_correlation_noiseless(self, synthetic_run):
        """Noiseless runs built on beta = 2 / ln Re + 0.01 recover slope 2."""
        runs = [synthetic_run(x, noise_pct=0.0) for x in (8.5, 9.5, 10.5, 11.5)]
        summary = analyze_profiles(runs)
        beta = summary.beta_vs_lnre
        assert beta.ok
        assert beta.n_runs == 4
        assert beta.slope == pytest.approx(2.0, abs=1e-6)
        assert beta.intercept == pytest.approx(0.01, abs=1e-7)
        assert summary.exit_code == EXIT_OK

    def test_insufficient_runs(self, scaling_profile):
        """Fewer than three runs leave the correlation unfitted."""
        summary = analyze_profiles([scaling_profile])
        assert len(summary.reports) == 1
        assert summary.beta_vs_lnre.status == "insufficient runs"
        assert summary.beta_vs_lnre.slope is None

    def test_degenerate_correlation(self, synthetic_run):
        """Runs sharing one ln Re cannot be correlated."""
        runs = [synthetic_run(10.0, noise_pct=0.0, label=f"r{i}") for i in range(3)]
        assert analyze_profiles(runs).beta_vs_lnre.status == "degenerate"

    def test_bands_and_closeness(self, synthetic_run):
        """Runs are split at Re_theta 15000; closeness counts runs above 10000."""
        runs = [
            synthetic_run(9.0, seed=1, re_theta=8000.0),
            synthetic_run(9.8, seed=2, re_theta=12000.0),
            synthetic_run(10.5, seed=3, re_theta=20000.0),
        ]
        summary = analyze_profiles(runs)
        low, high = summary.collapse_stats_by_band.values()
        assert low.n_points + high.n_points == sum(len(a.collapse_points) for a in summary.analyses)
        assert list(summary.collapse_stats_by_band) == ["re_theta <= 15000", "re_theta > 15000"]
        assert summary.closeness.n_runs == 2

    def test_empty_band(self, synthetic_run):
        """A band without runs maps to None."""
        summary = analyze_profiles([synthetic_run(10.0, seed=1)])
        assert summary.collapse_stats_by_band["re_theta <= 15000"] is None

    def test_failures_collected(self, make_profile, scaling_profile):
        """A failing run becomes a RunFailure and the rest still succeed."""
        bad = make_profile(np.geomspace(10, 90, 15), lambda y: 8 * y**0.15, label="wall")
        summary = analyze_profiles([scaling_profile, bad])
        assert len(summary.reports) == 1
        assert summary.failures[0].source == "wall"
        assert summary.failures[0].stage == "segmentation"
        assert summary.exit_code == EXIT_PARTIAL_FAILURE

    def test_all_failed(self, make_profile):
        """A batch with no successful run has exit code 1."""
        bad = make_profile(np.geomspace(10, 90, 15), lambda y: 8 * y**0.15)
        assert analyze_profiles([bad]).exit_code == EXIT_TOTAL_FAILURE

    def test_threads_keep_input_order(self, synthetic_run):
        """Results follow input order whatever the pool size."""
        runs = [synthetic_run(8.5 + 0.25 * i, seed=i) for i in range(8)]
        serial = analyze_profiles(runs, AnalysisConfig(max_workers=1))
        threaded = analyze_profiles(runs, AnalysisConfig(max_workers=4))
        assert [r.label for r in threaded.reports] == [p.label for p in runs]
        assert threaded.reports == serial.reports


class TestAnalyzeBatch:
    """Tests for file batches."""

    def test_single_file(self, tmp_path, scaling_profile):
        """One file gives one report and an unfitted correlation."""
        path = write_profile_file(scaling_profile, tmp_path / "run.txt")
        summary = analyze_batch([path])
        assert len(summary.reports) == 1
        assert summary.beta_vs_lnre.status == "insufficient runs"
        assert summary.exit_code == EXIT_OK

    def test_corrupt_file(self, tmp_path, synthetic_run):
        """A corrupt file is reported by name and the batch continues."""
        good = [
            write_profile_file(synthetic_run(x, seed=i), tmp_path / f"good{i}.txt")
            for i, x in enumerate((9.0, 10.0, 11.0))
        ]
        corrupt = tmp_path / "corrupt.txt"
        corrupt.write_text("# re_theta = 20000\n\n100\tnot-a-number\n", encoding="utf-8")
        summary = analyze_batch([good[0], corrupt, *good[1:]])
        assert len(summary.reports) == 3
        assert summary.beta_vs_lnre.ok
        assert len(summary.failures) == 1
        failure = summary.failures[0]
        assert failure.source == str(corrupt)
        assert failure.stage == "ingest"
        assert summary.exit_code == EXIT_PARTIAL_FAILURE

    def test_missing_file(self, tmp_path):
        """An unreadable file is a failure, not an exception."""
        summary = analyze_batch([tmp_path / "absent.txt"])
        assert summary.exit_code == EXIT_TOTAL_FAILURE
        assert summary.failures[0].stage == "ingest"

    def test_headerless_with_metadata(self, tmp_path, scaling_profile):
        """Whitespace tables take their metadata from the config."""
        path = tmp_path / "raw.dat"
        path.write_text(
            "".join(f"{y!r} {u!r}\n" for y, u in zip(scaling_profile.y_plus, scaling_profile.u_plus)),
            encoding="utf-8",
        )
        config = AnalysisConfig(
            input_format="whitespace_table",
            metadata={"re_theta": "20000", "u_free": "15", "u_tau": "0.5", "nu": "1.5e-5"},
        )
        summary = analyze_batch([path], config)
        assert summary.reports[0].label == "raw"
        assert summary.reports[0].ln_re2 == pytest.approx(10.0, rel=1e-9)

    def test_empty_batch(self):
        """At least one path is required."""
        with pytest.raises(ValueError, match="at least one file"):
            analyze_batch([])


class TestCompareModels:
    """Tests for the power-law against log-law comparison."""

    def test_scaling_law_prefers_power(self, scaling_profile):
        """A scaling-law run prefers the power law."""
        comparison = compare_models(analyze_profile(scaling_profile))
        assert comparison.preferred == "power"
        assert comparison.rms_power < comparison.rms_loglaw

    def test_log_law_prefers_log(self):
        """A log-law run prefers the log law and matches its own constants."""
        profile = generate(GeneratorSpec(LogLawModel(kappa=0.40, b=5.1)))
        comparison = compare_models(analyze_profile(profile))
        assert comparison.preferred == "log"
        assert comparison.rms_literature["monin_yaglom"] < 1e-9
        assert comparison.rms_literature["nikuradze"] > 0.01

    def test_flat_row(self, scaling_profile):
        """to_dict has one rms column per literature law."""
        row = compare_models(analyze_profile(scaling_profile)).to_dict()
        assert {"rms_nikuradze", "rms_monin_yaglom", "rms_schlichting", "rms_thesis"} <= set(row)

    def test_batch_order(self, synthetic_run):
        """compare_batch keeps input order."""
        analyses = [analyze_profile(synthetic_run(x, seed=1)) for x in (9.0, 11.0)]
        assert [c.label for c in compare_batch(analyses)] == [a.label for a in analyses]

    def test_report_is_frozen(self, scaling_profile):
        """Reports are immutable."""
        report = analyze_run(scaling_profile)
        with pytest.raises(dataclasses.FrozenInstanceError):
            report.alpha = 0.2
