"""
Empirical gap-decay envelope |gap_n| <= C(λ)·e^(−C_E |n|) and the audit of the
thickness lower bound against exact thickness.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy import stats

from ..amo.spectrum import SpectrumResult
from ..errors import InsufficientLabels
from ..ids.labeling import GapLabelAssignment
from ..sets.thickness import thickness
from ..utils.logger import get_logger
from .calculators import BoundParams, kappa, thickness_lower_bound

logger = get_logger(__name__)

MIN_LABELED_GAPS = 3
MIN_COUPLINGS = 3
RATE_FLOOR = 1e-6

AUDIT_COLUMNS = ["lambda", "n", "gap_length", "kappa", "bound", "tau", "bound_below_tau",
                 "conditional_on_regime"]


@dataclass
class LabeledSpectrum:
    """A spectrum with its gap labels."""

    lam: float
    spectrum: SpectrumResult
    labels: List[GapLabelAssignment]

    def decay_pairs(self) -> List[Tuple[int, float]]:
        """(|n|, gap length) for every labeled gap."""
        return [(abs(a.label_n), a.width) for a in self.labels if a.label_n is not None]


@dataclass
class GapDecayFit:
    """Common decay rate C_E and per-coupling prefactors C(λ)."""

    C_E_hat: float
    C_lambda: Dict[float, float]
    rates: Dict[float, float]
    pairs: Dict[float, List[Tuple[int, float]]] = field(default_factory=dict)
    decreasing_to_zero: bool = False

    def to_dict(self) -> Dict[str, Any]:
        lams = sorted(self.C_lambda)
        return {
            "C_E_hat": self.C_E_hat,
            "decreasing_to_zero": self.decreasing_to_zero,
            "per_lambda": [
                {"lambda": lam, "C_lambda": self.C_lambda[lam], "rate": self.rates[lam],
                 "pairs": [list(p) for p in self.pairs.get(lam, [])]}
                for lam in lams
            ],
        }


def _decay_rate(lam: float, pairs: List[Tuple[int, float]]) -> float:
    if len(pairs) < MIN_LABELED_GAPS:
        raise InsufficientLabels(
            f"λ={lam}: {len(pairs)} labeled gaps, need at least {MIN_LABELED_GAPS}",
            lam=lam, labeled=len(pairs))
    ns = np.array([n for n, _ in pairs], dtype=float)
    if np.unique(ns).size < 2:
        raise InsufficientLabels(f"λ={lam}: all labeled gaps share |n|={int(ns[0])}", lam=lam)
    lengths = np.array([g for _, g in pairs], dtype=float)
    fit = stats.linregress(ns, np.log(lengths))
    return float(-fit.slope)


def fit_gap_decay(sweep: Sequence[LabeledSpectrum], threads: int = 1) -> GapDecayFit:
    """
    Fit log(gap length) against |n| per coupling.

    The common rate C_E is the smallest per-coupling rate; C(λ) is then the
    least prefactor whose envelope dominates every observed pair.

    Raises:
        InsufficientLabels: fewer than 3 couplings, or some coupling with fewer
            than 3 labeled gaps
    """
    if len(sweep) < MIN_COUPLINGS:
        raise InsufficientLabels(f"{len(sweep)} couplings, need at least {MIN_COUPLINGS}",
                                 couplings=len(sweep))
    pairs = {item.lam: item.decay_pairs() for item in sweep}
    lams = list(pairs)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rate_list = list(pool.map(lambda lam: _decay_rate(lam, pairs[lam]), lams))
    else:
        rate_list = [_decay_rate(lam, pairs[lam]) for lam in lams]
    rates = dict(zip(lams, rate_list))

    C_E = min(rates.values())
    if C_E < RATE_FLOOR:
        logger.warning(f"gap lengths do not decay in |n| (rate {C_E:.3g}); using {RATE_FLOOR}")
        C_E = RATE_FLOOR

    C_lambda = {lam: max(g * math.exp(C_E * n) for n, g in pairs[lam]) for lam in lams}
    ordered = [C_lambda[lam] for lam in sorted(lams, key=abs)]
    decreasing = all(a <= b for a, b in zip(ordered, ordered[1:]))
    if not decreasing:
        logger.warning("C(λ) does not decrease as λ decreases on this sweep")
    logger.info(f"gap decay fit: C_E={C_E:.4g} over {len(lams)} couplings")
    return GapDecayFit(C_E_hat=C_E, C_lambda=C_lambda, rates=rates, pairs=pairs,
                       decreasing_to_zero=decreasing)


def audit_lower_bound(sweep: Sequence[LabeledSpectrum], fit: GapDecayFit, c: float,
                      C_H: float, h: float = 0.5, t: float = 2.0) -> pd.DataFrame:
    """
    Evaluate the thickness lower bound at every labeled gap with fitted constants
    and set it beside the exact thickness of the spectrum.

    Descriptive only: bound_below_tau records the comparison, nothing is asserted.
    """
    rows = []
    for item in sweep:
        tau = float(thickness(item.spectrum.union).tau)
        params = BoundParams(c=c, t=t, C_H=C_H, h=h, C_E=fit.C_E_hat,
                             C_lambda=fit.C_lambda[item.lam])
        for n, length in item.decay_pairs():
            k = kappa(params, length)
            bound = thickness_lower_bound(params, k) if k > 0 else math.nan
            rows.append({"lambda": item.lam, "n": n, "gap_length": length, "kappa": k,
                         "bound": bound, "tau": tau, "bound_below_tau": bool(bound <= tau),
                         "conditional_on_regime": True})
    return pd.DataFrame(rows, columns=AUDIT_COLUMNS)
