"""
Hypothesis checkers for the Newhouse two-set Gap Lemma and Astels' d-set Gap Lemma.

Conventions for extended values:
  * τ = +∞ times anything (0 included) is +∞; an interval summand covers every
    gap of the other set that is not longer than itself.
  * τ = +∞ enters the Astels sum as τ/(τ+1) = 1.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..errors import TooFewSets
from ..sets.interval import Interval, IntervalUnion, Real, exact_div
from ..sets.thickness import ThicknessReport, thickness
from ..utils.logger import get_logger

logger = get_logger(__name__)


@dataclass
class GapLemmaVerdict:
    """Outcome of a Gap Lemma hypothesis check."""

    kind: str
    hypotheses_hold: bool
    failed_conditions: List[str]
    astels_sum: Real
    predicted_interval: Optional[Interval] = None
    predicted_tau_lower_bound: Optional[Real] = None
    conditions: Dict[str, bool] = field(default_factory=dict)
    taus: List[Real] = field(default_factory=list)
    gammas: List[Real] = field(default_factory=list)
    diams: List[Real] = field(default_factory=list)
    order: Tuple[int, ...] = ()
    searched_orderings: bool = False

    @property
    def predicts_interval(self) -> bool:
        return self.predicted_interval is not None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "hypotheses_hold": self.hypotheses_hold,
            "conditions": dict(self.conditions),
            "failed_conditions": list(self.failed_conditions),
            "taus": list(self.taus),
            "gammas": list(self.gammas),
            "diams": list(self.diams),
            "astels_sum": self.astels_sum,
            "order": [i + 1 for i in self.order],
            "searched_orderings": self.searched_orderings,
            "predicted_interval": (None if self.predicted_interval is None
                                   else [self.predicted_interval.lo, self.predicted_interval.hi]),
            "predicted_tau_lower_bound": self.predicted_tau_lower_bound,
        }


def normalized_thickness(tau: Real) -> Real:
    """τ/(τ+1), with the limit value 1 at τ = +∞."""
    if math.isinf(tau):
        return 1
    return exact_div(tau, tau + 1)


def tau_product(t1: Real, t2: Real) -> Real:
    if math.isinf(t1) or math.isinf(t2):
        return math.inf
    return t1 * t2


def astels_sum(taus: Sequence[Real]) -> Real:
    return sum((normalized_thickness(t) for t in taus), 0)


def _sum_hull(Ks: Sequence[IntervalUnion]) -> Interval:
    lo, hi = Ks[0].lo, Ks[0].hi
    for K in Ks[1:]:
        lo, hi = lo + K.lo, hi + K.hi
    return Interval(lo, hi)


def check_newhouse(K1: IntervalUnion, K2: IntervalUnion) -> GapLemmaVerdict:
    """Evaluate the four Newhouse hypotheses; predict K1+K2 = [K1⁻+K2⁻, K1⁺+K2⁺] when they hold."""
    r1, r2 = thickness(K1), thickness(K2)
    conditions = {
        "hulls intersect": max(K1.lo, K2.lo) <= min(K1.hi, K2.hi),
        "gamma(K2) <= diam(K1)": r2.gamma <= r1.diam,
        "gamma(K1) <= diam(K2)": r1.gamma <= r2.diam,
        "1 <= tau(K1)*tau(K2)": tau_product(r1.tau, r2.tau) >= 1,
    }
    failed = [name for name, ok in conditions.items() if not ok]
    holds = not failed
    verdict = GapLemmaVerdict(
        kind="newhouse",
        hypotheses_hold=holds,
        failed_conditions=failed,
        astels_sum=astels_sum([r1.tau, r2.tau]),
        predicted_interval=_sum_hull([K1, K2]) if holds else None,
        conditions=conditions,
        taus=[r1.tau, r2.tau],
        gammas=[r1.gamma, r2.gamma],
        diams=[r1.diam, r2.diam],
        order=(0, 1),
    )
    logger.debug(f"Newhouse check: hold={holds}, failed={failed}")
    return verdict


def _astels_conditions(reports: Sequence[ThicknessReport]) -> Dict[str, bool]:
    """The order-dependent inequality system, 1-based names."""
    conditions: Dict[str, bool] = {}
    d = len(reports)
    for i in range(1, d):
        for j in range(i):
            conditions[f"gamma(K{j + 1}) <= diam(K{i + 1})"] = reports[j].gamma <= reports[i].diam
        prefix = sum((reports[k].diam for k in range(i)), 0)
        conditions[f"gamma(K{i + 1}) <= diam(K1)+...+diam(K{i})"] = reports[i].gamma <= prefix
    return conditions


def _order_holds(reports: Sequence[ThicknessReport], order: Tuple[int, ...]) -> bool:
    return all(_astels_conditions([reports[i] for i in order]).values())


def check_astels(Ks: Sequence[IntervalUnion], search_orderings: bool = False,
                 threads: int = 1) -> GapLemmaVerdict:
    """
    Check the d-set Gap Lemma system for the given order (optionally any order).

    Args:
        Ks: at least two canonical unions
        search_orderings: also try every permutation when the given order fails
        threads: workers for the permutation search

    Returns:
        GapLemmaVerdict with an interval prediction when S >= 1, or a thickness
        lower bound S/(1-S) when S < 1, provided the system holds.
    """
    if len(Ks) < 2:
        raise TooFewSets(f"check_astels needs at least 2 sets, got {len(Ks)}", count=len(Ks))

    reports = [thickness(K) for K in Ks]
    identity = tuple(range(len(Ks)))
    conditions = _astels_conditions(reports)
    order = identity
    holds = all(conditions.values())

    if not holds and search_orderings:
        candidates = list(itertools.permutations(identity))
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                flags = list(pool.map(lambda o: _order_holds(reports, o), candidates))
        else:
            flags = [_order_holds(reports, o) for o in candidates]
        # first satisfying permutation in lexicographic order
        for cand, ok in zip(candidates, flags):
            if ok:
                order, holds = cand, True
                break

    S = astels_sum([r.tau for r in reports])
    predicted_interval = None
    lower_bound = None
    if holds:
        if S >= 1:
            predicted_interval = _sum_hull(Ks)
        else:
            lower_bound = exact_div(S, 1 - S)

    failed = [name for name, ok in conditions.items() if not ok]
    logger.debug(f"Astels check: d={len(Ks)}, S={float(S):.6g}, hold={holds}, order={order}")
    return GapLemmaVerdict(
        kind="astels",
        hypotheses_hold=holds,
        failed_conditions=[] if holds else failed,
        astels_sum=S,
        predicted_interval=predicted_interval,
        predicted_tau_lower_bound=lower_bound,
        conditions=conditions,
        taus=[r.tau for r in reports],
        gammas=[r.gamma for r in reports],
        diams=[r.diam for r in reports],
        order=order,
        searched_orderings=search_orderings,
    )
