"""
Empirical Hölder exponent and constant of the IDS.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from ..amo.transfer import AmoParams
from ..utils.constants import DEFAULT_PHASE_AVG
from ..utils.logger import get_logger
from .counting import averaged_counts

logger = get_logger(__name__)

MIN_PAIRS = 100
DEFAULT_SCALES: Tuple[float, float] = (1e-3, 10 ** -0.5)


@dataclass
class HolderEstimate:
    """Fitted |𝔑(x) − 𝔑(y)| <= C_H |x − y|^h."""

    C_H_hat: float
    h_hat: float
    n_pairs: int
    r_value: float

    def to_dict(self) -> Dict[str, Any]:
        return {"C_H_hat": self.C_H_hat, "h_hat": self.h_hat,
                "n_pairs": self.n_pairs, "r_value": self.r_value}


def sample_pairs(params: AmoParams, pairs: int, rng: np.random.Generator,
                 anchors: Optional[Sequence[float]] = None,
                 scales: Tuple[float, float] = DEFAULT_SCALES) -> Tuple[np.ndarray, np.ndarray]:
    """
    Pairs (x, y) with log-uniform separations.

    Without anchors x is uniform on the norm hull; with anchors x is an anchor
    and y steps from it towards the hull centre.
    """
    H = 2.0 + 2.0 * abs(params.lam)
    s = np.exp(rng.uniform(np.log(scales[0]), np.log(scales[1]), pairs))
    if anchors:
        x = rng.choice(np.asarray(anchors, dtype=float), pairs)
        y = x - np.sign(x) * s
        y = np.where(x == 0.0, x + s, y)
    else:
        x = rng.uniform(-H, H - scales[1], pairs)
        y = x + s
    return x, y


def estimate_holder(params: AmoParams, N: int, pairs: int,
                    phase_avg: int = DEFAULT_PHASE_AVG,
                    anchors: Optional[Sequence[float]] = None, seed: int = 0,
                    scales: Tuple[float, float] = DEFAULT_SCALES) -> HolderEstimate:
    """
    Log-log regression of |𝔑(x) − 𝔑(y)| against |x − y|.

    h_hat is the regression slope; C_H_hat is the smallest constant such that
    every sampled pair satisfies the bound at exponent h_hat. Pairs with equal
    IDS values carry no information and are dropped.
    """
    if pairs < MIN_PAIRS:
        raise ValueError(f"pairs must be at least {MIN_PAIRS}")
    rng = np.random.default_rng(seed)
    x, y = sample_pairs(params, pairs, rng, anchors, scales)
    values = averaged_counts(params, N, phase_avg, np.concatenate([x, y]))
    dN = np.abs(values[:pairs] - values[pairs:])
    dx = np.abs(x - y)
    keep = dN > 0
    if np.count_nonzero(keep) < 3:
        raise ValueError("too few pairs with distinct IDS values; widen the scales or move the anchors")

    fit = stats.linregress(np.log(dx[keep]), np.log(dN[keep]))
    h = float(fit.slope)
    C = float(np.max(dN[keep] / dx[keep] ** h))
    logger.info(f"Hölder fit λ={params.lam}: h={h:.4f}, C_H={C:.4g} from {int(keep.sum())} pairs")
    return HolderEstimate(C_H_hat=C, h_hat=h, n_pairs=int(keep.sum()), r_value=float(fit.rvalue))
