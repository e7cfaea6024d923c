"""
Phase structure of the period trace.

At rational frequency p/q the period trace splits as

    t(E, ω) = Δ(E) + A cos(2πqω) + B sin(2πqω)

with Δ a monic degree-q polynomial and A, B independent of E. The split is
fitted rather than assumed, then validated on random (E, ω) samples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

import numpy as np
from numpy.polynomial import Chebyshev, Polynomial

from ..dioph.frequency import Rational
from ..errors import CouplingOutOfRange, ModelMismatch
from ..utils.constants import (
    FIT_RESIDUAL_SCALE, FIT_VALIDATION_POINTS, LARGE_Q, MAX_COUPLING_LARGE_Q,
)
from ..utils.logger import get_logger
from .transfer import period_trace

logger = get_logger(__name__)


@dataclass
class TraceModel:
    """Fitted Δ(E) + A cos(2πqω) + B sin(2πqω)."""

    lam: float
    freq: Rational
    delta_coeffs: Tuple[float, ...]
    amp: float
    A: float
    B: float
    fit_residual: float
    critical_points: Tuple[float, ...] = ()
    series: Chebyshev = field(default=None, repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.freq.q

    @property
    def hull(self) -> float:
        """Norm bound 2 + 2|λ| of the operator."""
        return 2.0 + 2.0 * abs(self.lam)

    def delta(self, E) -> np.ndarray:
        """Δ(E) evaluated directly from the transfer products."""
        return delta_direct(E, self.lam, self.freq)

    def trace(self, E, phase) -> np.ndarray:
        """Model value Δ(E) + A cos(2πqω) + B sin(2πqω)."""
        arg = 2.0 * np.pi * self.q * np.asarray(phase, dtype=float)
        return self.delta(E) + self.A * np.cos(arg) + self.B * np.sin(arg)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lambda": self.lam,
            "freq": str(self.freq),
            "delta_coeffs": list(self.delta_coeffs),
            "amp": self.amp,
            "A": self.A,
            "B": self.B,
            "fit_residual": self.fit_residual,
        }


def delta_direct(E, lam: float, freq: Rational) -> np.ndarray:
    """Δ(E) as the mean of t(E, 0) and t(E, 1/(2q))."""
    q = freq.mod_one().q
    return 0.5 * (period_trace(E, lam, freq, 0.0) + period_trace(E, lam, freq, 0.5 / q))


def check_coupling(lam: float, freq: Rational, allow_large_coupling: bool = False) -> None:
    """Raise CouplingOutOfRange when double-precision transfer products are not trusted."""
    q = freq.mod_one().q
    if q > LARGE_Q and abs(lam) > MAX_COUPLING_LARGE_Q and not allow_large_coupling:
        raise CouplingOutOfRange(
            f"|λ|={abs(lam)} exceeds {MAX_COUPLING_LARGE_Q} at q={q} > {LARGE_Q}",
            lam=lam, q=q)
    if allow_large_coupling and q > LARGE_Q and abs(lam) > MAX_COUPLING_LARGE_Q:
        logger.warning(f"coupling |λ|={abs(lam)} at q={q} is outside the restricted range")


def fit_trace_model(lam: float, freq: Rational, seed: int = 0,
                    allow_large_coupling: bool = False) -> TraceModel:
    """
    Fit the period trace at rational frequency.

    Δ is interpolated through q+1 Chebyshev nodes on the norm hull
    [−2−2|λ|, 2+2|λ|]; A and B come from the phases 0, 1/(4q), 1/(2q) and are
    taken as medians over the nodes.

    Args:
        lam: coupling λ
        freq: rational frequency p/q (reduced mod 1 internally)
        seed: seed of the random validation grid
        allow_large_coupling: lift the |λ| ≤ 1 restriction for q > 40

    Returns:
        TraceModel with power-basis Δ coefficients (ascending) and critical points

    Raises:
        ModelMismatch: the affine-in-(cos, sin) split did not reproduce t(E, ω)
        CouplingOutOfRange: q > 40 with |λ| > 1 and no override
    """
    freq = freq.mod_one()
    check_coupling(lam, freq, allow_large_coupling)
    q = freq.q
    H = 2.0 + 2.0 * abs(lam)

    series = Chebyshev.interpolate(lambda E: delta_direct(E, lam, freq), deg=q, domain=[-H, H])

    nodes = np.cos(np.pi * (np.arange(q + 1) + 0.5) / (q + 1)) * H
    t0 = period_trace(nodes, lam, freq, 0.0)
    t_quarter = period_trace(nodes, lam, freq, 0.25 / q)
    t_half = period_trace(nodes, lam, freq, 0.5 / q)
    delta_nodes = 0.5 * (t0 + t_half)
    A = float(np.median(0.5 * (t0 - t_half)))
    B = float(np.median(t_quarter - delta_nodes))
    amp = float(np.hypot(A, B))

    power = series.convert(kind=Polynomial)
    coeffs = np.zeros(q + 1)
    coeffs[:len(power.coef)] = power.coef
    model = TraceModel(lam=lam, freq=freq, delta_coeffs=tuple(float(c) for c in coeffs),
                       amp=amp, A=A, B=B, fit_residual=0.0, series=series)

    rng = np.random.default_rng(seed)
    E_val = rng.uniform(-H, H, FIT_VALIDATION_POINTS)
    w_val = rng.uniform(0.0, 1.0, FIT_VALIDATION_POINTS)
    # trace magnitudes grow like e^(qγ(E)) off the spectrum, so the residual is
    # measured relative to max(1, |t|)
    t_val = period_trace(E_val, lam, freq, w_val)
    residual = float(np.max(np.abs(t_val - model.trace(E_val, w_val)) / np.maximum(1.0, np.abs(t_val))))
    model.fit_residual = residual

    bound = FIT_RESIDUAL_SCALE * (1.0 + abs(lam)) ** q
    if not residual <= bound:
        raise ModelMismatch(
            f"period trace does not fit Δ + A cos + B sin at λ={lam}, α={freq}: "
            f"residual {residual:.3g} > {bound:.3g}",
            lam=lam, freq=str(freq), residual=residual, bound=bound)
    if abs(coeffs[-1] - 1.0) > 1e-6:
        raise ModelMismatch(f"Δ is not monic at α={freq}: leading coefficient {coeffs[-1]:.9g}",
                            lam=lam, freq=str(freq))

    model.critical_points = _critical_points(series, H)
    logger.debug(f"trace model λ={lam}, α={freq}: amp={amp:.6g}, residual={residual:.3g}, "
                 f"{len(model.critical_points)} critical points")
    return model


def _critical_points(series: Chebyshev, H: float) -> Tuple[float, ...]:
    if series.degree() < 2:
        return ()
    roots = series.deriv().roots()
    real = roots[np.abs(roots.imag) <= 1e-8 * H].real
    real = real[(real >= -H) & (real <= H)]
    return tuple(float(x) for x in np.sort(real))


def trace_critical_points(F, q: int, H: float) -> Tuple[float, ...]:
    """Critical points in [−H, H] of a degree-q polynomial F given by values."""
    return _critical_points(Chebyshev.interpolate(F, deg=q, domain=[-H, H]), H)
