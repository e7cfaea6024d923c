"""
Empirical Diophantine constants.

For exponent t > 1 the scan reports c_best = min_{1<=q<=q_max} q^(t-1)·dist(qα, ℤ)
(plain normalization) or q^(t-1)·|qα − 2πp|_min (two_pi normalization). The
distance is computed with exact integer arithmetic on a certified rational
approximant of α, so binary rounding never produces a spuriously small value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from mpmath import mp, mpf

from ..errors import PrecisionExhausted, RationalInput
from ..utils.constants import DC_GUARD_DIGITS
from ..utils.logger import get_logger
from .continued import convergents, rational_approximant
from .frequency import FrequencySpec, Rational

logger = get_logger(__name__)

PLAIN = "plain"
TWO_PI = "two_pi"


@dataclass
class DCReport:
    """Best Diophantine constant for exponent t up to q_max."""

    t: float
    q_max: int
    c_best: float
    argmin_q: int
    normalization: str = PLAIN
    frequency: str = ""
    convergent_profile: List[Tuple[int, float]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "frequency": self.frequency,
            "t": self.t,
            "q_max": self.q_max,
            "normalization": self.normalization,
            "c_best": self.c_best,
            "argmin_q": self.argmin_q,
            "convergent_profile": [[q, v] for q, v in self.convergent_profile],
        }


def _to_fraction(x: mpf) -> Fraction:
    man, exp = x.man_exp
    return Fraction(man) * (Fraction(2) ** exp)


def _scaled_alpha(spec: FrequencySpec, normalization: str, q_max: int) -> Tuple[Fraction, Fraction, float]:
    """Rational x and error bound such that the scanned distance is scale·dist(q·x, ℤ)."""
    digits = DC_GUARD_DIGITS + 2 * len(str(q_max))
    approx, err = rational_approximant(spec, digits)
    if normalization == PLAIN:
        return approx, err, 1.0
    with mp.workdps(digits + 10):
        x = (mpf(approx.numerator) / approx.denominator) / (2 * mp.pi)
        frac_x = _to_fraction(x)
    # rounding of the mpmath division is far below the approximant error
    return frac_x, err + Fraction(1, 10 ** digits), 2 * math.pi


def _distance(q: int, num: int, den: int) -> Fraction:
    r = (q * num) % den
    return Fraction(min(r, den - r), den)


def _certified_convergents(spec: FrequencySpec) -> List[Rational]:
    out: List[Rational] = []
    depth = 1
    while True:
        try:
            out = convergents(spec, depth)
        except PrecisionExhausted:
            return out
        if len(out) < depth:
            return out
        depth += 1


def dc_constants(spec: FrequencySpec, t: float, q_max: int,
                 normalization: str = PLAIN) -> DCReport:
    """
    Exhaustive scan of q^(t-1)·dist(qα, ℤ) for q = 1..q_max.

    Raises:
        RationalInput: α rational (c would be 0 at its denominator)
        PrecisionExhausted: the digits of a decimal α cannot certify the scan
    """
    if spec.is_rational:
        raise RationalInput(f"rational frequency {spec} is not Diophantine", frequency=str(spec))
    if not t > 1:
        raise ValueError("t must exceed 1")
    if q_max < 1:
        raise ValueError("q_max must be at least 1")
    if normalization not in (PLAIN, TWO_PI):
        raise ValueError(f"unknown normalization {normalization!r}")

    x, err, scale = _scaled_alpha(spec, normalization, q_max)
    num, den = x.numerator, x.denominator
    exponent = t - 1.0

    best_val = math.inf
    best_q = 0
    for q in range(1, q_max + 1):
        val = scale * (q ** exponent) * float(_distance(q, num, den))
        if val < best_val:
            best_val, best_q = val, q

    # each term is uncertain by scale·q^t·err
    slack = scale * (q_max ** t) * float(err)
    if slack > 1e-3 * best_val:
        raise PrecisionExhausted(
            f"frequency digits cannot certify the scan up to q_max={q_max} "
            f"(uncertainty {slack:.3g} vs c_best {best_val:.3g})",
            q_max=q_max, slack=slack)

    try:
        cvs = convergents(spec, 64)
    except PrecisionExhausted:
        # decimal digits run out before 64 quotients; keep the certified prefix
        cvs = _certified_convergents(spec)
    profile = []
    for r in cvs:
        if r.q > q_max:
            break
        if r.q >= 1:
            profile.append((r.q, scale * (r.q ** exponent) * float(_distance(r.q, num, den))))

    logger.debug(f"DC scan {spec}: t={t}, q_max={q_max}, c_best={best_val:.9g} at q={best_q}")
    return DCReport(t=t, q_max=q_max, c_best=best_val, argmin_q=best_q,
                    normalization=normalization, frequency=str(spec),
                    convergent_profile=profile)
