"""
Thickness of Σ_λ along a decreasing coupling sweep.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence

import pandas as pd

from ..amo.spectrum import spectrum_for
from ..dioph.frequency import FrequencySpec
from ..sets.thickness import thickness
from ..utils.constants import DEFAULT_EDGE_TOL, DEFAULT_GAP_CLOSE_SCALE, default_gap_close_tol
from ..utils.logger import get_logger

logger = get_logger(__name__)

SWEEP_COLUMNS = ["lambda", "p", "q", "tau", "gamma", "diam", "n_gaps", "tau_increasing"]


def thickness_sweep(spec: FrequencySpec, lambdas: Sequence[float], approx_order: int,
                    edge_tol: float = DEFAULT_EDGE_TOL,
                    gap_close_scale: float = DEFAULT_GAP_CLOSE_SCALE,
                    threads: int = 1) -> pd.DataFrame:
    """
    τ(Σ_λ) per λ at a fixed approximation order.

    Args:
        spec: frequency
        lambdas: nonzero couplings sorted in descending order of |λ|
        approx_order: convergent index for irrational frequencies

    Returns:
        DataFrame with SWEEP_COLUMNS; tau_increasing compares each row with the previous one
    """
    if any(lam == 0 for lam in lambdas):
        raise ValueError("couplings must be nonzero")
    if any(abs(a) < abs(b) for a, b in zip(lambdas, lambdas[1:])):
        raise ValueError("couplings must be sorted in descending order")

    def row(lam: float):
        result = spectrum_for(lam, spec, approx_order, edge_tol,
                              default_gap_close_tol(lam, gap_close_scale))
        report = thickness(result.union, truncation_order=result.approx_order)
        return result, report

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(row, lambdas))
    else:
        results = [row(lam) for lam in lambdas]

    records = []
    prev_tau: Optional[float] = None
    for lam, (result, report) in zip(lambdas, results):
        tau = float(report.tau)
        records.append({
            "lambda": lam,
            "p": result.params.freq.p,
            "q": result.params.freq.q,
            "tau": tau,
            "gamma": float(report.gamma),
            "diam": float(report.diam),
            "n_gaps": len(report.gaps),
            "tau_increasing": prev_tau is None or tau > prev_tau,
        })
        prev_tau = tau
    frame = pd.DataFrame(records, columns=SWEEP_COLUMNS)
    logger.info(f"thickness sweep α={spec}: {len(frame)} couplings, "
                f"increasing throughout: {bool(frame['tau_increasing'].all())}")
    return frame
