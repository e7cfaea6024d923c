"""
Hofstadter butterfly dataset: phase-union spectra for every reduced p/q up to q_max.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

import pandas as pd

from ..dioph.frequency import Rational
from ..sets.interval import IntervalUnion
from ..utils.constants import DEFAULT_EDGE_TOL
from ..utils.logger import get_logger
from .spectrum import spectrum_rational

logger = get_logger(__name__)

BUTTERFLY_COLUMNS = ["p", "q", "band_index", "lo", "hi"]


def butterfly_frequencies(q_max: int) -> List[Rational]:
    """All reduced p/q in [0, 1) with 1 <= q <= q_max, ordered by q then p."""
    out = []
    for q in range(1, q_max + 1):
        for p in range(q):
            if math.gcd(p, q) == 1:
                out.append(Rational(p, q))
    return out


def butterfly(lam: float, q_max: int, edge_tol: float = DEFAULT_EDGE_TOL,
              gap_close_tol: Optional[float] = None,
              threads: int = 1) -> List[Tuple[Rational, IntervalUnion]]:
    """Spectra for all reduced p/q with q <= q_max, in a fixed row order."""
    if q_max < 2:
        raise ValueError("q_max must be at least 2")
    freqs = butterfly_frequencies(q_max)

    def row(freq: Rational) -> Tuple[Rational, IntervalUnion]:
        return freq, spectrum_rational(lam, freq, edge_tol, gap_close_tol).union

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(row, freqs))
    else:
        rows = [row(f) for f in freqs]
    logger.info(f"butterfly λ={lam}: {len(rows)} frequencies up to q={q_max}")
    return rows


def butterfly_frame(rows: List[Tuple[Rational, IntervalUnion]]) -> pd.DataFrame:
    """Flatten butterfly rows to (p, q, band_index, lo, hi)."""
    records = [
        {"p": freq.p, "q": freq.q, "band_index": i, "lo": part.lo, "hi": part.hi}
        for freq, union in rows
        for i, part in enumerate(union)
    ]
    return pd.DataFrame(records, columns=BUTTERFLY_COLUMNS)
