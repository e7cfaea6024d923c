"""
Atomic file writers for JSON and CSV outputs.
"""

import json
import math
import os
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

import numpy as np
import pandas as pd

from .constants import INF_TOKEN
from .logger import get_logger

logger = get_logger(__name__)

PathLike = Union[str, Path]


def jsonable(value: Any) -> Any:
    """Convert numbers and containers to JSON-safe values; +∞ becomes "+inf"."""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating, Fraction)):
        x = float(value)
        if math.isinf(x):
            return INF_TOKEN if x > 0 else "-inf"
        return x
    return value


def _atomic_write_text(path: PathLike, text: str) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=str(target.parent), prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return target


def dumps_json(payload: Any) -> str:
    return json.dumps(jsonable(payload), indent=2, ensure_ascii=False) + "\n"


def write_json(path: PathLike, payload: Any) -> Path:
    """Write payload as JSON atomically."""
    target = _atomic_write_text(path, dumps_json(payload))
    logger.info(f"JSON written to {target}")
    return target


def write_csv(path: PathLike, frame: pd.DataFrame) -> Path:
    """Write a DataFrame as CSV atomically, full float precision."""
    text = frame.to_csv(index=False, float_format=None)
    target = _atomic_write_text(path, text)
    logger.info(f"CSV written to {target}")
    return target
