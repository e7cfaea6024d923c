"""
Tests for JSON/CSV writers, run configuration and the error hierarchy.
"""

import json
import math
from fractions import Fraction

import numpy as np
import pandas as pd
import pytest

from amspec.errors import AmspecError, EdgeFindingFailure, ExperimentError, ParseError
from amspec.utils.config import RunConfig
from amspec.utils.constants import default_gap_close_tol, default_label_tol
from amspec.utils.io import dumps_json, jsonable, write_csv, write_json


def test_jsonable_handles_extended_numbers():
    payload = {"tau": math.inf, "neg": -math.inf, "frac": Fraction(1, 4),
               "np": np.float64(0.5), "n": np.int64(3), "flag": np.bool_(True), 1: (1, 2)}
    assert jsonable(payload) == {"tau": "+inf", "neg": "-inf", "frac": 0.25, "np": 0.5,
                                 "n": 3, "flag": True, "1": [1, 2]}
    assert json.loads(dumps_json(payload))["tau"] == "+inf"


def test_writers_are_atomic_and_leave_no_temp_files(tmp_path):
    target = write_json(tmp_path / "nested" / "a.json", {"x": 1})
    assert json.loads(target.read_text(encoding="utf-8")) == {"x": 1}
    frame = pd.DataFrame({"lo": [0.1 + 0.2], "hi": [1.0]})
    csv_path = write_csv(tmp_path / "a.csv", frame)
    assert float(csv_path.read_text(encoding="utf-8").splitlines()[1].split(",")[0]) == 0.1 + 0.2
    assert sorted(p.name for p in tmp_path.iterdir()) == ["a.csv", "nested"]


def test_run_config_from_env(monkeypatch, tmp_path):
    monkeypatch.setenv("AMSPEC_THREADS", "4")
    monkeypatch.setenv("AMSPEC_OUTPUT_DIR", str(tmp_path / "out"))
    run = RunConfig.from_env()
    assert run.threads == 4
    assert run.ensure_output_folder().is_dir()
    assert RunConfig.from_env(threads=2).threads == 2
    assert RunConfig(threads=0).threads == 1
    with pytest.raises(ValueError):
        RunConfig(edge_tol=0.0)


def test_default_tolerances():
    assert default_gap_close_tol(0.5) == pytest.approx(6e-9)
    assert default_label_tol(20000) == pytest.approx(2.5e-4)
    assert default_label_tol(10 ** 6) == 1e-4


def test_errors_carry_context():
    err = EdgeFindingFailure("odd roots", {"roots": 3})
    assert isinstance(err, AmspecError)
    assert err.diagnostics == {"roots": 3}
    assert ExperimentError("boom", lambdas=[0.1, 0.2]).lambdas == (0.1, 0.2)
    parse = ParseError("bad", key="dims", line=3)
    assert (parse.key, parse.line) == ("dims", 3)
