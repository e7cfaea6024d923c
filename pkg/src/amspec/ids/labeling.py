"""
Gap labeling: each bounded spectral gap of a p/q spectrum carries an IDS value frac(n·p/q), n != 0.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any, Dict, List, Optional

import numpy as np

from ..amo.spectrum import SpectrumResult
from ..dioph.continued import label_targets
from ..dioph.frequency import Rational, rational_spec
from ..sets.interval import Interval, bounded_gaps
from ..utils.constants import DEFAULT_N_MAX, default_label_tol
from ..utils.logger import get_logger
from .counting import IdsCurve

logger = get_logger(__name__)


@dataclass
class GapLabelAssignment:
    """
    Label of one bounded gap; label_n is None when no n within n_max meets tol.

    ids_value is the IDS at the spectrum frequency and decides the label;
    curve_value is the supplied curve at the same point, which differs when
    that curve was computed at the irrational α of a convergent spectrum.
    """

    gap_index: int
    gap: Interval
    label_n: Optional[int]
    ids_value: float
    residual: float
    candidate_n: int
    curve_value: Optional[float] = None

    @property
    def labeled(self) -> bool:
        return self.label_n is not None

    @property
    def width(self) -> float:
        return float(self.gap.length)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "gap_index": self.gap_index,
            "gap": [float(self.gap.lo), float(self.gap.hi)],
            "label_n": self.label_n,
            "ids_value": self.ids_value,
            "residual": self.residual,
            "candidate_n": self.candidate_n,
            "curve_value": self.curve_value,
        }


def _curve_at(curve: IdsCurve, freq: Rational) -> IdsCurve:
    """The curve itself when it already uses freq, else the same curve rebuilt at freq."""
    if curve.params.is_rational and curve.params.rational == freq:
        return curve
    logger.info(f"IDS curve at α={curve.params.freq} recomputed at the spectrum frequency {freq}")
    return IdsCurve(params=replace(curve.params, freq=freq), volume=curve.volume,
                    phase_avg=curve.phase_avg, xs=np.empty(0), values=np.empty(0))


def best_label(value: float, targets) -> tuple:
    """(n, residual) minimizing |value − frac(nα)|; ties go to the smallest |n|, positive first."""
    return min(((n, abs(value - frac)) for n, frac in targets),
               key=lambda item: (item[1], abs(item[0]), item[0] < 0))


def label_gaps(spectrum: SpectrumResult, curve: IdsCurve, n_max: int = DEFAULT_N_MAX,
               tol: Optional[float] = None) -> List[GapLabelAssignment]:
    """
    Label the bounded gaps of a spectrum from an IDS curve.

    Gaps of a p/q spectrum carry IDS values k/q, so labels are matched against
    frac(n·p/q) of the spectrum's own frequency. Congruent n give identical
    targets and the smallest |n| wins. A curve computed at another frequency
    (for instance the irrational α of a convergent spectrum) is recomputed at
    p/q with the same volume and phase count. Both curves are evaluated
    exactly at each gap midpoint.

    Args:
        spectrum: spectrum whose gaps are labeled
        curve: IDS curve for the same coupling
        n_max: largest |n| tried
        tol: acceptance tolerance; defaults to max(5/N, 1e-4)

    Returns:
        One assignment per bounded gap, in increasing energy order
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    tol = default_label_tol(curve.volume) if tol is None else tol
    gaps = bounded_gaps(spectrum.union)
    if not gaps:
        return []

    freq = spectrum.params.rational
    at_freq = _curve_at(curve, freq)
    targets = label_targets(rational_spec(freq.p, freq.q), n_max)
    mids = np.array([float(g.midpoint) for g in gaps])
    values = at_freq.evaluate(mids)
    curve_values = values if at_freq is curve else curve.evaluate(mids)

    out: List[GapLabelAssignment] = []
    for i, (gap, value, seen) in enumerate(zip(gaps, values, curve_values)):
        n, residual = best_label(float(value), targets)
        label = n if residual <= tol else None
        out.append(GapLabelAssignment(gap_index=i, gap=gap, label_n=label,
                                      ids_value=float(value), residual=residual, candidate_n=n,
                                      curve_value=float(seen)))
    unlabeled = sum(1 for a in out if a.label_n is None)
    if unlabeled:
        logger.debug(f"{unlabeled} of {len(out)} gaps unlabeled at tol={tol:.3g}")
    logger.info(f"labeled {len(out) - unlabeled}/{len(out)} gaps at α={freq}")
    return out
