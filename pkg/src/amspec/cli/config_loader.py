"""
Strict JSON ingestion of experiment configurations.

Unknown keys are errors, every default is materialized into the returned
config, and serialize_config(load_config(path)) is a fixed point.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..dioph.frequency import parse_frequency
from ..errors import FrequencyParseError, ParseError
from ..pipeline.experiment import DEFAULT_APPROX_ORDER, ExperimentConfig
from ..utils.constants import DEFAULT_EDGE_TOL, DEFAULT_GAP_CLOSE_SCALE

TOP_LEVEL_KEYS = {
    "dims", "freq_specs", "lambdas", "approx_order", "tolerances", "seeds",
    "threads", "threshold_bracket", "search_orderings",
}
REQUIRED_KEYS = ("dims", "freq_specs", "lambdas")
TOLERANCE_KEYS = {"edge_tol", "gap_close_scale", "label_tol"}


def _line_of(text: Optional[str], key: str) -> Optional[int]:
    if not text:
        return None
    m = re.search(r'"%s"\s*:' % re.escape(key), text)
    return text.count("\n", 0, m.start()) + 1 if m else None


def _number(value: Any, key: str, text: Optional[str]) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"'{key}' must be a number, got {value!r}", key=key, line=_line_of(text, key.split('.')[-1]))
    return float(value)


def _integer(value: Any, key: str, text: Optional[str]) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"'{key}' must be an integer, got {value!r}", key=key, line=_line_of(text, key))
    return value


def parse_config(payload: Dict[str, Any], text: Optional[str] = None) -> ExperimentConfig:
    """
    Build and validate an ExperimentConfig from a decoded JSON object.

    Raises:
        ParseError: unknown or missing keys, wrong types, bad frequency strings
        ValidationError: a value violates an experiment invariant
    """
    if not isinstance(payload, dict):
        raise ParseError("configuration must be a JSON object")
    for key in payload:
        if key not in TOP_LEVEL_KEYS:
            raise ParseError(f"unknown key '{key}'", key=key, line=_line_of(text, key))
    for key in REQUIRED_KEYS:
        if key not in payload:
            raise ParseError(f"missing required key '{key}'", key=key)

    tolerances = payload.get("tolerances", {})
    if not isinstance(tolerances, dict):
        raise ParseError("'tolerances' must be an object", key="tolerances", line=_line_of(text, "tolerances"))
    for key in tolerances:
        if key not in TOLERANCE_KEYS:
            raise ParseError(f"unknown key 'tolerances.{key}'", key=f"tolerances.{key}",
                             line=_line_of(text, key))

    specs = payload["freq_specs"]
    if not isinstance(specs, list) or not all(isinstance(s, str) for s in specs):
        raise ParseError("'freq_specs' must be a list of strings", key="freq_specs",
                         line=_line_of(text, "freq_specs"))
    try:
        freq_specs = [parse_frequency(s) for s in specs]
    except FrequencyParseError as exc:
        raise ParseError(str(exc), key="freq_specs", line=_line_of(text, "freq_specs")) from exc

    lambdas = payload["lambdas"]
    if not isinstance(lambdas, list) or not all(isinstance(s, list) for s in lambdas):
        raise ParseError("'lambdas' must be a list of lists", key="lambdas", line=_line_of(text, "lambdas"))
    lambdas = [[_number(v, "lambdas", text) for v in sweep] for sweep in lambdas]

    bracket = payload.get("threshold_bracket", [0.0, 1.0])
    if not isinstance(bracket, list) or len(bracket) != 2:
        raise ParseError("'threshold_bracket' must be [lo, hi]", key="threshold_bracket",
                         line=_line_of(text, "threshold_bracket"))

    label_tol = tolerances.get("label_tol")
    config = ExperimentConfig(
        dims=_integer(payload["dims"], "dims", text),
        freq_specs=freq_specs,
        lambdas=lambdas,
        approx_order=_integer(payload.get("approx_order", DEFAULT_APPROX_ORDER), "approx_order", text),
        edge_tol=_number(tolerances.get("edge_tol", DEFAULT_EDGE_TOL), "tolerances.edge_tol", text),
        gap_close_scale=_number(tolerances.get("gap_close_scale", DEFAULT_GAP_CLOSE_SCALE),
                                "tolerances.gap_close_scale", text),
        label_tol=None if label_tol is None else _number(label_tol, "tolerances.label_tol", text),
        seeds=_integer(payload.get("seeds", 0), "seeds", text),
        threads=_integer(payload.get("threads", 1), "threads", text),
        threshold_bracket=(_number(bracket[0], "threshold_bracket", text),
                           _number(bracket[1], "threshold_bracket", text)),
        search_orderings=bool(payload.get("search_orderings", False)),
    )
    return config.validate()


def load_config(path: Union[str, Path]) -> ExperimentConfig:
    """Read, parse and validate an experiment configuration file."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc.msg}", line=exc.lineno) from exc
    return parse_config(payload, text)


def serialize_config(config: ExperimentConfig) -> Dict[str, Any]:
    """Config with every default spelled out, in load_config's key layout."""
    return config.to_dict()
