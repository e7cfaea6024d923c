"""
Tests for the sum-of-spectra experiment, threshold search, thickness sweeps
and report writing.
"""

import json
import math
from pathlib import Path

import pytest

from amspec.dioph import GOLDEN_MEAN, parse_frequency
from amspec.errors import ExperimentError, NoSwitchFound, ValidationError
from amspec.pipeline import (
    SWEEP_COLUMNS, ExperimentConfig, empirical_threshold, evaluate_tuple, find_threshold,
    report_frame, run_main_theorem, save_report, thickness_sweep,
)


def _config(lambdas, order=7, **kwargs):
    return ExperimentConfig(dims=len(lambdas), freq_specs=[GOLDEN_MEAN] * len(lambdas),
                            lambdas=lambdas, approx_order=order, **kwargs)


def test_free_pair_sums_to_minus_four_four():
    report = run_main_theorem(_config([[0.0], [0.0]]))
    record = report.record_for((0.0, 0.0))
    assert record.is_interval
    assert record.check.oracle.pairs() == [pytest.approx((-4.0, 4.0), abs=1e-9)]
    assert all(math.isinf(r.tau) for r in record.thickness)
    assert record.predicted_interval


def test_small_coupling_pair_is_interval_and_large_is_consistent():
    report = run_main_theorem(_config([[0.05, 0.9], [0.05, 0.9]]))
    small = report.record_for((0.05, 0.05))
    assert small.predicted_interval
    assert small.is_interval
    assert len(small.check.oracle) == 1
    assert small.check.status == "pass"
    assert all(s.params.freq.q == 21 for s in small.spectra)
    # every tuple went through the strict oracle comparison
    assert all(rec.check.ok for rec in report.records)
    assert report.empirical_threshold is not None and report.empirical_threshold >= 0.05


def test_report_files_are_independent_of_threads(tmp_path):
    config = _config([[0.1, 0.5], [0.3]], order=5)
    serial = run_main_theorem(config, threads=1)
    pooled = run_main_theorem(config, threads=8)
    assert config.threads == 1
    assert [r.lambdas for r in serial.records] == [(0.1, 0.3), (0.5, 0.3)]
    a = save_report(serial, tmp_path / "serial", stem="experiment")
    b = save_report(pooled, tmp_path / "pooled", stem="experiment")
    for kind in ("json", "csv"):
        assert Path(a[kind]).read_bytes() == Path(b[kind]).read_bytes()


def test_validate_rejects_bad_sweeps():
    with pytest.raises(ValidationError) as excinfo:
        _config([[0.1, 0.0], [0.1]]).validate()
    assert excinfo.value.context["key"] == "lambdas"
    with pytest.raises(ValidationError):
        ExperimentConfig(dims=2, freq_specs=[GOLDEN_MEAN], lambdas=[[0.1], [0.1]]).validate()
    with pytest.raises(ValidationError):
        _config([[0.1], [0.1]], threshold_bracket=(0.5, 0.1)).validate()
    assert _config([[0.1], [0.2]]).validate().tuples() == [(0.1, 0.2)]


def test_evaluate_tuple_wraps_module_errors():
    config = ExperimentConfig(dims=2, freq_specs=[parse_frequency("1/41")] * 2,
                              lambdas=[[1.5], [1.5]])
    with pytest.raises(ExperimentError) as excinfo:
        evaluate_tuple(config, (1.5, 1.5))
    assert excinfo.value.lambdas == (1.5, 1.5)


def test_empirical_threshold_stops_at_first_failure():
    report = run_main_theorem(_config([[0.05, 0.9], [0.05, 0.9]], order=5))
    flags = {r.lambdas: r.is_interval for r in report.records}
    expected = 0.9 if all(flags.values()) else 0.05
    assert empirical_threshold(report.records) == expected


def test_threshold_without_switch():
    config = _config([[0.001], [0.001]], order=4, threshold_bracket=(0.001, 0.002))
    with pytest.raises(NoSwitchFound):
        find_threshold(config)
    with pytest.raises(ValueError):
        find_threshold(config, bisection_steps=2)


@pytest.mark.parametrize("order", [6, 7])
def test_thickness_grows_as_coupling_shrinks(order):
    frame = thickness_sweep(GOLDEN_MEAN, [0.4, 0.2, 0.1, 0.05], order, threads=2)
    assert list(frame.columns) == SWEEP_COLUMNS
    assert frame["tau_increasing"].all()
    assert frame["tau"].is_monotonic_increasing


def test_thickness_sweep_rejects_bad_couplings():
    with pytest.raises(ValueError):
        thickness_sweep(GOLDEN_MEAN, [0.1, 0.0], 4)
    with pytest.raises(ValueError):
        thickness_sweep(GOLDEN_MEAN, [0.1, 0.2], 4)


def test_save_report_writes_json_and_csv(tmp_path):
    report = run_main_theorem(_config([[0.1], [0.2]], order=4))
    frame = report_frame(report)
    assert list(frame.columns) == ["lambda_1", "lambda_2", "tau_1", "tau_2", "astels_sum",
                                   "predicted", "oracle_parts", "is_interval", "status"]
    paths = save_report(report, str(tmp_path / "out"), stem="run")
    payload = json.loads((tmp_path / "out" / "run.json").read_text(encoding="utf-8"))
    assert payload["schema_version"] == "1.0"
    assert payload["config"]["lambdas"] == [[0.1], [0.2]]
    assert paths["csv"].endswith("run.csv")
