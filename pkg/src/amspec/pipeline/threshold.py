"""
Empirical coupling threshold on the diagonal λ_1 = ... = λ_d = λ.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

import numpy as np

from ..errors import NoSwitchFound
from ..utils.logger import get_logger
from .experiment import ExperimentConfig, SpectrumCache, evaluate_tuple

logger = get_logger(__name__)

COARSE_SAMPLES = 5
MIN_BISECTION_STEPS = 4


@dataclass
class ThresholdReport:
    """Switch point of the predicate "the sum is an interval" at a fixed order."""

    value: float
    bracket: Tuple[float, float]
    order: int
    samples: List[Tuple[float, bool]] = field(default_factory=list)
    monotone: bool = True
    initial_bracket: Tuple[float, float] = (0.0, 1.0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "bracket": list(self.bracket),
            "order": self.order,
            "monotone": self.monotone,
            "initial_bracket": list(self.initial_bracket),
            "samples": [{"lambda": lam, "is_interval": flag} for lam, flag in self.samples],
        }


def find_threshold(config: ExperimentConfig, bisection_steps: int = 8) -> ThresholdReport:
    """
    Bisect the equal-coupling predicate "oracle sum is an interval".

    Coarse samples over config.threshold_bracket locate the first switch from
    interval to gapped; bisection then narrows it. A predicate that switches
    back is reported as non-monotone rather than forced.

    Raises:
        NoSwitchFound: the predicate is constant at every sample
    """
    if bisection_steps < MIN_BISECTION_STEPS:
        raise ValueError(f"bisection_steps must be at least {MIN_BISECTION_STEPS}")
    lo, hi = config.threshold_bracket
    cache = SpectrumCache(config)
    samples: List[Tuple[float, bool]] = []

    def predicate(lam: float) -> bool:
        record = evaluate_tuple(config, [lam] * config.dims, cache)
        samples.append((float(lam), record.is_interval))
        return record.is_interval

    coarse = [float(x) for x in np.linspace(lo, hi, COARSE_SAMPLES)]
    flags = [predicate(lam) for lam in coarse]
    if len(set(flags)) == 1:
        raise NoSwitchFound(
            f"sum is {'always' if flags[0] else 'never'} an interval on [{lo}, {hi}]",
            samples=list(zip(coarse, flags)), order=config.approx_order)

    switches = sum(1 for a, b in zip(flags, flags[1:]) if a != b)
    monotone = switches == 1 and flags[0]
    if not monotone:
        logger.warning(f"interval predicate is not monotone at the coarse samples: {flags}")

    i = next(k for k in range(len(flags) - 1) if flags[k] != flags[k + 1])
    a, b = coarse[i], coarse[i + 1]
    left_flag = flags[i]
    for _ in range(bisection_steps):
        mid = 0.5 * (a + b)
        if predicate(mid) == left_flag:
            a = mid
        else:
            b = mid

    value = 0.5 * (a + b)
    logger.info(f"threshold at order {config.approx_order}: λ* ≈ {value:.6g} in [{a:.6g}, {b:.6g}]")
    return ThresholdReport(value=value, bracket=(a, b), order=config.approx_order,
                           samples=samples, monotone=monotone, initial_bracket=(lo, hi))
