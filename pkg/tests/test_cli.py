"""
Tests for the command-line interface and the configuration loader.
"""

import json

import pytest

from amspec.cli.cli import main
from amspec.cli.config_loader import load_config, serialize_config
from amspec.errors import ParseError, ValidationError


def _read(path):
    return json.loads(path.read_text(encoding="utf-8"))


def _write_config(tmp_path, payload, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload, indent=2), encoding="utf-8")
    return path


def test_spectrum_command(tmp_path):
    out = tmp_path / "s.json"
    assert main(["spectrum", "--lambda", "0", "--freq", "1/5", "-o", str(out)]) == 0
    payload = _read(out)
    assert payload["parts"] == [pytest.approx([-2.0, 2.0], abs=1e-9)]
    assert payload["schema_version"] == "1.0"


def test_spectrum_command_csv_and_bloch(tmp_path):
    out = tmp_path / "s.csv"
    assert main(["spectrum", "--lambda", "0.5", "--freq", "1/2", "--format", "csv",
                 "-o", str(out)]) == 0
    assert out.read_text(encoding="utf-8").splitlines()[0] == "band_index,lo,hi"
    out_json = tmp_path / "b.json"
    assert main(["spectrum", "--lambda", "0.5", "--freq", "1/3", "--bloch", "32",
                 "-o", str(out_json)]) == 0
    assert _read(out_json)["bloch_oracle"]["hausdorff"] <= 5e-3
    assert main(["spectrum", "--lambda", "0.5", "--freq", "1/3", "--bloch", "4",
                 "-o", str(out_json)]) == 1


def test_dc_command(tmp_path):
    out = tmp_path / "dc.json"
    assert main(["dc", "--freq", "[0;(1)]", "--t", "2", "--qmax", "1000", "-o", str(out)]) == 0
    assert _read(out)["c_best"] == pytest.approx(0.381966, abs=1e-6)


def test_exit_codes(tmp_path):
    out = str(tmp_path / "x.json")
    assert main(["sum", "--lambda", "0.1", "--freq", "1/0", "-o", out]) == 2
    assert main(["dc", "--freq", "1/2", "--t", "2", "--qmax", "10", "-o", out]) == 1
    assert main(["spectrum", "--freq", "1/3", "-o", out]) == 2
    assert main(["check", "--lemma", "astels", "-o", out]) == 1
    assert main([]) == 2


def test_thickness_and_check_from_union_files(tmp_path):
    cantor = tmp_path / "cantor.json"
    cantor.write_text(json.dumps({"parts": [[0, 1 / 9], [2 / 9, 1 / 3], [2 / 3, 7 / 9], [8 / 9, 1]]}),
                      encoding="utf-8")
    out = tmp_path / "t.json"
    assert main(["thickness", "--union", str(cantor), "-o", str(out)]) == 0
    assert _read(out)["tau"] == pytest.approx(1.0)

    interval = tmp_path / "interval.json"
    interval.write_text(json.dumps({"parts": [[0, 1]]}), encoding="utf-8")
    assert main(["thickness", "--union", str(interval), "-o", str(out)]) == 0
    assert _read(out)["tau"] == "+inf"

    out = tmp_path / "c.json"
    assert main(["check", "--union", str(interval), str(cantor), "-o", str(out)]) == 0
    payload = _read(out)
    assert payload["status"] == "pass"
    assert payload["oracle_is_interval"]


def test_sum_command(tmp_path):
    out = tmp_path / "sum.json"
    assert main(["sum", "--lambda", "0", "0", "--freq", "1/3", "-o", str(out)]) == 0
    payload = _read(out)
    assert payload["is_interval"]
    assert payload["sum"]["parts"] == [pytest.approx([-4.0, 4.0], abs=1e-9)]


def test_output_dir_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("AMSPEC_OUTPUT_DIR", str(tmp_path / "env_out"))
    assert main(["dc", "--freq", "[0;(2)]", "--t", "2", "--qmax", "50"]) == 0
    assert (tmp_path / "env_out" / "dc.json").exists()


MINIMAL = {"dims": 2, "freq_specs": ["[0;(1)]", "[0;(1)]"], "lambdas": [[0.1], [0.2]],
           "approx_order": 4}


def test_load_config_materializes_defaults(tmp_path):
    config = load_config(_write_config(tmp_path, MINIMAL))
    first = serialize_config(config)
    assert first["tolerances"]["edge_tol"] == 1e-10
    assert first["threshold_bracket"] == [0.0, 1.0]
    again = load_config(_write_config(tmp_path, first, name="again.json"))
    assert serialize_config(again) == first


def test_load_config_rejects_bad_input(tmp_path):
    with pytest.raises(ValidationError):
        load_config(_write_config(tmp_path, dict(MINIMAL, lambdas=[[0.1]])))
    with pytest.raises(ValidationError):
        load_config(_write_config(tmp_path, dict(MINIMAL, lambdas=[[0.0], [0.2]])))
    with pytest.raises(ParseError) as excinfo:
        load_config(_write_config(tmp_path, dict(MINIMAL, colour="blue")))
    assert excinfo.value.key == "colour"
    assert excinfo.value.line is not None
    with pytest.raises(ParseError):
        load_config(_write_config(tmp_path, dict(MINIMAL, tolerances={"edge": 1e-9})))
    with pytest.raises(ParseError):
        load_config(_write_config(tmp_path, dict(MINIMAL, freq_specs=["1/0", "1/2"])))
    broken = tmp_path / "broken.json"
    broken.write_text('{\n  "dims": 2,\n  "lambdas": [\n', encoding="utf-8")
    with pytest.raises(ParseError) as excinfo:
        load_config(broken)
    assert excinfo.value.line is not None


def test_pipeline_command(tmp_path):
    config = _write_config(tmp_path, MINIMAL)
    out_dir = tmp_path / "results"
    assert main(["pipeline", "--config", str(config), "-o", str(out_dir)]) == 0
    assert (out_dir / "experiment.json").exists()
    assert (out_dir / "experiment.csv").exists()
    assert _read(out_dir / "experiment.json")["config"] == serialize_config(load_config(config))


def test_pipeline_command_reports_config_errors(tmp_path):
    config = _write_config(tmp_path, dict(MINIMAL, dims=3))
    assert main(["pipeline", "--config", str(config), "-o", str(tmp_path / "r")]) == 1


def test_bloch_grid_is_checked_before_any_spectrum(tmp_path, monkeypatch):
    def never(*args, **kwargs):
        raise AssertionError("spectrum computed before the grid was validated")

    monkeypatch.setattr("amspec.cli.cli.spectrum_for", never)
    out = tmp_path / "s.json"
    assert main(["spectrum", "--lambda", "0.5", "--freq", "1/3", "--bloch", "4", "-o", str(out)]) == 1
    assert not out.exists()


def test_gap_close_scale_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("AMSPEC_GAP_CLOSE_SCALE", "1e-6")
    out = tmp_path / "s.json"
    assert main(["spectrum", "--lambda", "0.5", "--freq", "2/5", "-o", str(out)]) == 0
    assert _read(out)["gap_close_tol"] == pytest.approx(6e-6)
    assert main(["spectrum", "--lambda", "0.5", "--freq", "2/5", "--gap-close-tol", "1e-8",
                 "-o", str(out)]) == 0
    assert _read(out)["gap_close_tol"] == pytest.approx(1e-8)
    bfly = tmp_path / "b.json"
    assert main(["butterfly", "--lambda", "0.5", "--qmax", "3", "-o", str(bfly)]) == 0
    assert _read(bfly)["gap_close_tol"] == pytest.approx(6e-6)


@pytest.mark.parametrize("argv,name", [
    (["spectrum", "--lambda", "0.4", "--freq", "3/8", "--bloch", "32"], "spectrum.json"),
    (["butterfly", "--lambda", "0.4", "--qmax", "8"], "butterfly.json"),
])
def test_outputs_are_identical_across_threads(tmp_path, argv, name):
    one, eight = tmp_path / "one" / name, tmp_path / "eight" / name
    one.parent.mkdir()
    eight.parent.mkdir()
    assert main(argv + ["--threads", "1", "-o", str(one)]) == 0
    assert main(argv + ["--threads", "8", "-o", str(eight)]) == 0
    assert one.read_bytes() == eight.read_bytes()


def test_pipeline_files_are_identical_across_threads(tmp_path):
    config = _write_config(tmp_path, dict(MINIMAL, lambdas=[[0.1, 0.3], [0.2, 0.4]]))
    for threads in ("1", "8"):
        assert main(["pipeline", "--config", str(config), "--threads", threads,
                     "-o", str(tmp_path / threads)]) == 0
    for name in ("experiment.json", "experiment.csv"):
        assert (tmp_path / "1" / name).read_bytes() == (tmp_path / "8" / name).read_bytes()


def test_label_command_csv(tmp_path):
    out = tmp_path / "labels.csv"
    assert main(["label", "--lambda", "0.2", "--freq", "8/13", "--N", "4000",
                 "--format", "csv", "-o", str(out)]) == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "gap_index,lo,hi,label_n,ids_value,residual,curve_value"
    assert len(lines) == 13
