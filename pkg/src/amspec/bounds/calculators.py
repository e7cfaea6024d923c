"""
Bound calculators: operator-norm perturbation, exponential gap estimate and
the thickness lower bound built from a Diophantine constant, a Hölder
constant and a gap-decay envelope.

These are formula evaluators. The constants they consume are fitted from
computed data, so every comparison is conditional on the small-coupling regime.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Any, Dict, Tuple


@dataclass
class BoundParams:
    """Constants of the gap estimate and of the thickness lower bound."""

    c: float = 1.0
    t: float = 2.0
    C_H: float = 1.0
    h: float = 0.5
    C_E: float = 1.0
    C_lambda: float = 1.0
    v_norm: float = 1.0
    r0: float = 1.0
    r: float = 0.5
    b: int = 1

    def __post_init__(self):
        """Validate configuration after initialization."""
        if self.b < 1:
            raise ValueError("b must be a positive integer")
        if not self.t > self.b:
            raise ValueError(f"t must exceed b={self.b}")
        if not 0 < self.h <= 1:
            raise ValueError("h must lie in (0, 1]")
        for name in ("c", "C_H", "C_E", "C_lambda", "v_norm", "r0"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if not 0 < self.r < self.r0:
            raise ValueError("r must lie in (0, r0)")

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def perturbation_bounds(lam: float) -> Tuple[float, float]:
    """
    (Hausdorff distance bound to [−2, 2], bound on |diam − 4|) for ‖V‖ = 2|λ|.
    """
    norm = 2.0 * abs(lam)
    return norm, 2.0 * norm


def gap_length_bound(params: BoundParams, n: int) -> float:
    """|v|^(2/3)·exp(−2π r |n|) for a gap labeled n != 0."""
    if n == 0:
        raise ValueError("gap label n must be nonzero")
    return params.v_norm ** (2.0 / 3.0) * math.exp(-2.0 * math.pi * params.r * abs(n))


def thickness_lower_bound(params: BoundParams, kappa: float) -> float:
    """
    (c/C_H)^(1/h) / (C_λ·e^(−C_E κ)·(2κ)^((t−1)/h)).

    Raises:
        ValueError: kappa <= 0
    """
    if not kappa > 0:
        raise ValueError("kappa must be positive")
    numerator = (params.c / params.C_H) ** (1.0 / params.h)
    denominator = (params.C_lambda * math.exp(-params.C_E * kappa)
                   * (2.0 * kappa) ** ((params.t - 1.0) / params.h))
    return numerator / denominator


def kappa(params: BoundParams, gap_length: float) -> float:
    """Inverse of the decay envelope: gap_length = C_λ·e^(−C_E κ)."""
    if not gap_length > 0:
        raise ValueError("gap_length must be positive")
    return -math.log(gap_length / params.C_lambda) / params.C_E
