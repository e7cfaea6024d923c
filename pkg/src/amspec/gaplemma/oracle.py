"""
Cross-check Gap Lemma predictions against the exact Minkowski sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence

from ..errors import PredictionContradiction, TooFewSets
from ..sets.interval import IntervalUnion, Real, is_interval, iterated_sum
from ..sets.thickness import thickness
from ..utils.logger import get_logger
from .checker import GapLemmaVerdict, check_astels

logger = get_logger(__name__)

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_NO_PREDICTION = "no prediction; oracle sum attached"


@dataclass
class PredictionCheck:
    """Verdict, oracle sum and the comparison between them."""

    verdict: GapLemmaVerdict
    oracle: IntervalUnion
    oracle_tau: Real
    interval_matches: Optional[bool]
    tau_bound_holds: Optional[bool]

    @property
    def status(self) -> str:
        if self.interval_matches is None and self.tau_bound_holds is None:
            return STATUS_NO_PREDICTION
        if self.interval_matches is False or self.tau_bound_holds is False:
            return STATUS_FAIL
        return STATUS_PASS

    @property
    def ok(self) -> bool:
        return self.status != STATUS_FAIL

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status,
            "verdict": self.verdict.to_dict(),
            "oracle": self.oracle.to_dict(),
            "oracle_is_interval": is_interval(self.oracle),
            "oracle_tau": self.oracle_tau,
            "interval_matches": self.interval_matches,
            "tau_bound_holds": self.tau_bound_holds,
        }


def verify_prediction(Ks: Sequence[IntervalUnion], search_orderings: bool = False,
                      strict: bool = False, verdict: Optional[GapLemmaVerdict] = None) -> PredictionCheck:
    """
    Compare the Astels verdict for Ks with the exact iterated Minkowski sum.

    A contradicted prediction is reported with status "fail"; with strict=True it
    raises PredictionContradiction instead.
    """
    if len(Ks) < 2:
        raise TooFewSets(f"verify_prediction needs at least 2 sets, got {len(Ks)}", count=len(Ks))

    if verdict is None:
        verdict = check_astels(Ks, search_orderings=search_orderings)
    oracle = iterated_sum(Ks)
    oracle_tau = thickness(oracle).tau

    interval_matches = None
    if verdict.predicted_interval is not None:
        pred = verdict.predicted_interval
        interval_matches = is_interval(oracle) and oracle.lo == pred.lo and oracle.hi == pred.hi

    tau_bound_holds = None
    if verdict.predicted_tau_lower_bound is not None:
        tau_bound_holds = oracle_tau >= verdict.predicted_tau_lower_bound

    check = PredictionCheck(verdict=verdict, oracle=oracle, oracle_tau=oracle_tau,
                            interval_matches=interval_matches, tau_bound_holds=tau_bound_holds)
    if not check.ok:
        logger.error(f"Gap Lemma prediction contradicted by the oracle: {check.to_dict()}")
        if strict:
            raise PredictionContradiction("Gap Lemma prediction contradicted by the exact sum",
                                          report=check.to_dict())
    return check
