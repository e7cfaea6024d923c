"""
Independent spectrum oracle: Bloch eigenvalue sweep of the period-q cell.

For phase ω and Bloch phase θ the cell Hamiltonian is the q×q Hermitian matrix
with diagonal V(1..q), unit off-diagonals and corner hoppings e^{±iθ}. Its
k-th eigenvalue sweeps out band k as θ runs over [0, π] and ω over one period.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

import numpy as np

from ..dioph.frequency import Rational
from ..sets.interval import IntervalUnion, make_union
from ..utils.logger import get_logger
from .transfer import Potential, period_potential

logger = get_logger(__name__)

MIN_GRID = 8


def bloch_hamiltonians(lam: float, freq: Rational, phase: float, thetas: np.ndarray,
                       potential: Optional[Potential] = None) -> np.ndarray:
    """Stack of cell Hamiltonians, shape (len(thetas), q, q)."""
    freq = freq.mod_one()
    q = freq.q
    diag = period_potential(lam, freq, phase, potential)
    H = np.zeros((thetas.size, q, q), dtype=complex)
    idx = np.arange(q)
    H[:, idx, idx] = diag
    if q > 1:
        H[:, idx[1:], idx[:-1]] = 1.0
        H[:, idx[:-1], idx[1:]] = 1.0
    H[:, q - 1, 0] += np.exp(1j * thetas)
    H[:, 0, q - 1] += np.exp(-1j * thetas)
    return H


def _sweep_phase(lam: float, freq: Rational, phase: float, thetas: np.ndarray,
                 potential: Optional[Potential]) -> np.ndarray:
    """Per-band (min, max) over θ at one phase, shape (q, 2)."""
    eig = np.linalg.eigvalsh(bloch_hamiltonians(lam, freq, phase, thetas, potential))
    return np.stack([eig.min(axis=0), eig.max(axis=0)], axis=1)


def bloch_oracle(lam: float, freq: Rational, omega_grid: int = 64, theta_grid: int = 64,
                 threads: int = 1, *, phase: Optional[float] = None,
                 potential: Optional[Potential] = None) -> IntervalUnion:
    """
    Spectrum from a dense (ω, θ) eigenvalue sweep.

    ω runs over one period [0, 1/q) since the spectrum is 1/q-periodic in ω;
    θ runs over [0, π] including both ends, where band edges sit.

    Args:
        lam: coupling λ
        freq: p/q
        omega_grid: number of phases
        theta_grid: number of Bloch phases
        threads: worker threads over phases; results do not depend on it
        phase: sweep θ at this single phase instead of taking the phase union
        potential: 1-periodic potential; defaults to 2λ cos(2πx)

    Returns:
        Canonical union of the swept bands
    """
    if omega_grid < MIN_GRID or theta_grid < MIN_GRID:
        raise ValueError(f"grids must have at least {MIN_GRID} points")
    freq = freq.mod_one()
    if phase is None:
        phases = np.arange(omega_grid) / (omega_grid * freq.q)
    else:
        phases = np.array([phase], dtype=float)
    thetas = np.linspace(0.0, np.pi, theta_grid)

    def job(w: float) -> np.ndarray:
        return _sweep_phase(lam, freq, float(w), thetas, potential)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            sweeps: List[np.ndarray] = list(pool.map(job, phases))
    else:
        sweeps = [job(w) for w in phases]

    stacked = np.stack(sweeps)
    lo = stacked[:, :, 0].min(axis=0)
    hi = stacked[:, :, 1].max(axis=0)
    union = make_union(zip(lo.tolist(), hi.tolist()))
    logger.debug(f"Bloch oracle λ={lam}, α={freq}: {phases.size}×{theta_grid} grid, {len(union)} bands")
    return union
