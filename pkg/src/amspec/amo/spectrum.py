"""
Almost Mathieu spectra at rational frequencies and their convergent-based
approximation of irrational ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..dioph.continued import convergent_at
from ..dioph.frequency import FrequencySpec, Rational
from ..errors import EdgeFindingFailure, RationalInput
from ..sets.interval import IntervalUnion, hausdorff_distance, make_union, merge_small_gaps
from ..utils.constants import (
    DEFAULT_EDGE_TOL, POTENTIAL_SAMPLES, SCHEMA_VERSION, default_gap_close_tol,
)
from ..utils.logger import get_logger
from .bands import isolate_bands
from .trace_model import TraceModel, fit_trace_model, trace_critical_points
from .transfer import AmoParams, Potential, period_trace

logger = get_logger(__name__)


@dataclass
class SpectrumResult:
    """A computed spectrum together with everything needed to reproduce it."""

    params: AmoParams
    approx_order: int
    union: IntervalUnion
    phase_union: bool
    edge_tol: float
    gap_close_tol: float
    closed_gaps: int = 0
    amp: float = 0.0
    fit_residual: float = 0.0
    frequency: str = ""

    @property
    def q(self) -> int:
        return self.params.rational.q

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "lambda": self.params.lam,
            "frequency": self.frequency or str(self.params.freq),
            "convergent": str(self.params.freq),
            "approx_order": self.approx_order,
            "phase": None if self.phase_union else self.params.phase,
            "phase_union": self.phase_union,
            "edge_tol": self.edge_tol,
            "gap_close_tol": self.gap_close_tol,
            "closed_gaps": self.closed_gaps,
            "amp": self.amp,
            "fit_residual": self.fit_residual,
            "parts": [list(p.as_pair()) for p in self.union],
        }


def _finish(bands: List[Tuple[float, float]], q: int, gap_close_tol: float,
            diagnostics: Dict[str, Any]) -> Tuple[IntervalUnion, int]:
    union, closed = merge_small_gaps(make_union(bands), gap_close_tol)
    if len(union) > q:
        diagnostics = dict(diagnostics, n_bands=len(union))
        raise EdgeFindingFailure(f"{len(union)} bands exceed the period q={q}", diagnostics)
    if closed:
        logger.debug(f"closed {closed} gaps narrower than {gap_close_tol:.3g}")
    return union, closed


def spectrum_rational(lam: float, freq: Rational, edge_tol: float = DEFAULT_EDGE_TOL,
                      gap_close_tol: Optional[float] = None, *,
                      model: Optional[TraceModel] = None,
                      allow_large_coupling: bool = False) -> SpectrumResult:
    """
    Phase-union spectrum {E : |Δ(E)| <= 2 + amp} at rational frequency.

    Args:
        lam: coupling λ
        freq: p/q, reduced mod 1 internally
        edge_tol: bisection tolerance on band edges
        gap_close_tol: gaps narrower than this are merged; defaults to 1e-9·(4+4|λ|)
        model: a previously fitted trace model for the same (λ, p/q)
        allow_large_coupling: lift the |λ| <= 1 restriction for q > 40

    Returns:
        SpectrumResult with phase_union=True and approx_order 0
    """
    if not edge_tol > 0:
        raise ValueError("edge_tol must be positive")
    freq = freq.mod_one()
    gap_close_tol = default_gap_close_tol(lam) if gap_close_tol is None else gap_close_tol
    model = model or fit_trace_model(lam, freq, allow_large_coupling=allow_large_coupling)

    scan = isolate_bands(model.delta, 2.0 + model.amp, model.hull, freq.q,
                         model.critical_points, edge_tol)
    union, closed = _finish(scan.bands, freq.q, gap_close_tol, scan.diagnostics)
    logger.debug(f"spectrum λ={lam}, α={freq}: {len(union)} bands")
    return SpectrumResult(params=AmoParams(lam, freq), approx_order=0, union=union,
                          phase_union=True, edge_tol=edge_tol, gap_close_tol=gap_close_tol,
                          closed_gaps=closed, amp=model.amp, fit_residual=model.fit_residual)


def spectrum_fixed_phase(lam: float, freq: Rational, phase: float,
                         edge_tol: float = DEFAULT_EDGE_TOL,
                         gap_close_tol: Optional[float] = None, *,
                         model: Optional[TraceModel] = None,
                         allow_large_coupling: bool = False,
                         potential: Optional[Potential] = None) -> SpectrumResult:
    """
    Fixed-phase spectrum {E : |t(E, ω)| <= 2}.

    With the default cosine potential the scan reuses the trace model; a custom
    1-periodic potential is scanned directly with its own critical points and
    the norm hull 2 + max|v|.
    """
    if not edge_tol > 0:
        raise ValueError("edge_tol must be positive")
    freq = freq.mod_one()
    gap_close_tol = default_gap_close_tol(lam) if gap_close_tol is None else gap_close_tol

    def trace(E):
        return period_trace(E, lam, freq, phase, potential)

    if potential is None:
        model = model or fit_trace_model(lam, freq, allow_large_coupling=allow_large_coupling)
        hull, critical, amp, residual = model.hull, model.critical_points, model.amp, model.fit_residual
    else:
        samples = np.asarray(potential(np.linspace(0.0, 1.0, POTENTIAL_SAMPLES, endpoint=False)))
        hull = 2.0 + float(np.max(np.abs(samples)))
        critical = trace_critical_points(trace, freq.q, hull)
        amp, residual = 0.0, 0.0

    scan = isolate_bands(trace, 2.0, hull, freq.q, critical, edge_tol)
    union, closed = _finish(scan.bands, freq.q, gap_close_tol, scan.diagnostics)
    return SpectrumResult(params=AmoParams(lam, freq, phase, potential), approx_order=0, union=union,
                          phase_union=False, edge_tol=edge_tol, gap_close_tol=gap_close_tol,
                          closed_gaps=closed, amp=amp, fit_residual=residual)


def spectrum_irrational(lam: float, spec: FrequencySpec, order: int,
                        edge_tol: float = DEFAULT_EDGE_TOL,
                        gap_close_tol: Optional[float] = None, *,
                        allow_large_coupling: bool = False) -> SpectrumResult:
    """
    Phase-union spectrum at the order-th continued-fraction convergent of α.

    Raises:
        RationalInput: the frequency is rational
        PrecisionExhausted: a decimal α cannot certify the requested convergent
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    if spec.is_rational:
        raise RationalInput(f"{spec} is rational; use spectrum_rational", frequency=str(spec))
    convergent, reached = convergent_at(spec, order)
    result = spectrum_rational(lam, convergent, edge_tol, gap_close_tol,
                               allow_large_coupling=allow_large_coupling)
    result.approx_order = reached
    result.frequency = str(spec)
    logger.info(f"spectrum λ={lam}, α={spec} at order {reached} ({convergent}): "
                f"{len(result.union)} bands")
    return result


def spectrum_for(lam: float, spec: FrequencySpec, order: int,
                 edge_tol: float = DEFAULT_EDGE_TOL,
                 gap_close_tol: Optional[float] = None) -> SpectrumResult:
    """Rational specs directly, irrational ones at their order-th convergent."""
    if spec.is_rational:
        result = spectrum_rational(lam, spec.rational, edge_tol, gap_close_tol)
        result.frequency = str(spec)
        return result
    return spectrum_irrational(lam, spec, order, edge_tol, gap_close_tol)


def successive_deltas(lam: float, spec: FrequencySpec, orders: Sequence[int],
                      edge_tol: float = DEFAULT_EDGE_TOL,
                      gap_close_tol: Optional[float] = None) -> List[Dict[str, Any]]:
    """
    Hausdorff distances between spectra at consecutive convergents k and k+1.

    Returns:
        One row per k: order, both convergents, distance
    """
    rows: List[Dict[str, Any]] = []
    cache: Dict[int, SpectrumResult] = {}

    def get(k: int) -> SpectrumResult:
        if k not in cache:
            cache[k] = spectrum_irrational(lam, spec, k, edge_tol, gap_close_tol)
        return cache[k]

    for k in orders:
        a, b = get(k), get(k + 1)
        rows.append({
            "order": k,
            "convergent": str(a.params.freq),
            "next_convergent": str(b.params.freq),
            "hausdorff": float(hausdorff_distance(a.union, b.union)),
        })
    return rows
