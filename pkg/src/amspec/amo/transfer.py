"""
Almost Mathieu potential and transfer matrices.

    (Hψ)(n) = ψ(n+1) + ψ(n−1) + v(nα + ω) ψ(n)

with v(x) = 2λ cos(2πx) unless a 1-periodic potential v is supplied. The
one-step transfer matrix is T(n) = [[E − V(n), −1], [1, 0]] and the period-q
trace is t(E, ω) = tr[T(q) ··· T(1)].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Union

import numpy as np

from ..dioph.frequency import FrequencySpec, Rational

Frequency = Union[Rational, FrequencySpec]
Potential = Callable[[np.ndarray], np.ndarray]


def cosine_potential(lam: float) -> Potential:
    """x ↦ 2λ cos(2πx)."""
    def v(x):
        return 2.0 * lam * np.cos(2.0 * np.pi * np.asarray(x, dtype=float))
    return v


@dataclass(frozen=True)
class AmoParams:
    """
    Coupling λ, frequency α and phase ω of a one-frequency quasiperiodic operator.

    `potential` is a vectorized 1-periodic function on the circle; None means
    the almost Mathieu potential 2λ cos(2πx).
    """

    lam: float
    freq: Frequency
    phase: float = 0.0
    potential: Optional[Potential] = field(default=None, compare=False)

    @property
    def is_cosine(self) -> bool:
        return self.potential is None

    def v(self, x) -> np.ndarray:
        """Potential evaluated at circle points x."""
        fn = self.potential or cosine_potential(self.lam)
        return np.asarray(fn(np.asarray(x, dtype=float)), dtype=float)

    @property
    def alpha(self) -> float:
        if isinstance(self.freq, Rational):
            return float(self.freq)
        return self.freq.to_float()

    @property
    def rational(self) -> Rational:
        """The frequency as a rational taken mod 1; irrational frequencies raise TypeError."""
        if isinstance(self.freq, Rational):
            return self.freq.mod_one()
        if self.freq.is_rational:
            return self.freq.rational.mod_one()
        raise TypeError(f"frequency {self.freq} is not rational")

    @property
    def is_rational(self) -> bool:
        return isinstance(self.freq, Rational) or self.freq.is_rational

    def to_dict(self) -> Dict[str, Any]:
        name = "cosine" if self.potential is None else getattr(self.potential, "__name__", "custom")
        return {"lambda": self.lam, "freq": str(self.freq), "phase": self.phase, "potential": name}


def potential(params: AmoParams, n: int) -> float:
    """V(n) = v(nα + ω); rational α uses n·p mod q to keep the argument small."""
    if params.is_rational:
        r = params.rational
        arg = ((n * r.p) % r.q) / r.q + params.phase
    else:
        arg = n * params.alpha + params.phase
    if params.is_cosine:
        return 2.0 * params.lam * math.cos(2.0 * math.pi * arg)
    return float(params.v(arg))


def transfer_matrix(E: float, params: AmoParams, n: int) -> np.ndarray:
    """One-step transfer matrix [[E − V(n), −1], [1, 0]], determinant 1."""
    return np.array([[E - potential(params, n), -1.0], [1.0, 0.0]])


def period_potential(lam: float, freq: Rational, phase, v: Optional[Potential] = None) -> np.ndarray:
    """
    Potential values V(1..q) for one period.

    Args:
        phase: scalar or array of phases; the result has shape (q,) + shape(phase)
        v: 1-periodic potential; defaults to 2λ cos(2πx)
    """
    r = freq.mod_one()
    n = np.arange(1, r.q + 1)
    base = ((n * r.p) % r.q) / r.q
    ph = np.asarray(phase, dtype=float)
    arg = base.reshape((r.q,) + (1,) * ph.ndim) + ph
    if v is None:
        return 2.0 * lam * np.cos(2.0 * np.pi * arg)
    return np.asarray(v(arg), dtype=float)


def period_trace(E, lam: float, freq: Rational, phase=0.0, v: Optional[Potential] = None) -> np.ndarray:
    """
    Trace of the period-q transfer product, vectorized over E and phase.

    E and phase broadcast against each other; the product T(q)···T(1) is
    accumulated entry by entry so no 2×2 matrices are materialized.
    """
    E = np.asarray(E, dtype=float)
    V = period_potential(lam, freq, phase, v)
    shape = np.broadcast_shapes(E.shape, V.shape[1:])
    m00 = np.ones(shape)
    m01 = np.zeros(shape)
    m10 = np.zeros(shape)
    m11 = np.ones(shape)
    for vn in V:
        a = E - vn
        m00, m01, m10, m11 = a * m00 - m10, a * m01 - m11, m00, m01
    return m00 + m11


def period_matrix(E: float, params: AmoParams) -> np.ndarray:
    """The full 2×2 product T(q)···T(1) at a single energy."""
    q = params.rational.q
    M = np.eye(2)
    for n in range(1, q + 1):
        M = transfer_matrix(E, params, n) @ M
    return M
