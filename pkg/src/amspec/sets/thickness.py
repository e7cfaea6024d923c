"""
Planks, local thickness and global thickness of a canonical interval union.

For a bounded gap U the left plank is [a, U.lo] with a the right end of the
nearest gap to the left whose length is >= length(U), or K⁻ when there is none.
The right plank is symmetric. Both are found with one monotone-stack pass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .interval import Interval, IntervalUnion, Real, bounded_gaps, diameter, exact_div


@dataclass(frozen=True)
class GapReport:
    """One bounded gap with its planks and local thickness τ(K, U)."""

    gap: Interval
    left_plank_len: Real
    right_plank_len: Real
    local_tau: Real

    def to_dict(self) -> Dict[str, Any]:
        return {
            "gap": [self.gap.lo, self.gap.hi],
            "left_plank_len": self.left_plank_len,
            "right_plank_len": self.right_plank_len,
            "local_tau": self.local_tau,
        }


@dataclass(frozen=True)
class ThicknessReport:
    """τ(K), Γ(K), diameter and the per-gap breakdown."""

    tau: Real
    gamma: Real
    diam: Real
    gaps: List[GapReport] = field(default_factory=list)
    truncation_order: Optional[int] = None

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.tau)

    def thinnest_gap(self) -> Optional[GapReport]:
        if not self.gaps:
            return None
        return min(self.gaps, key=lambda g: g.local_tau)

    def to_dict(self, with_gaps: bool = True) -> Dict[str, Any]:
        payload = {
            "tau": self.tau,
            "gamma": self.gamma,
            "diam": self.diam,
            "n_gaps": len(self.gaps),
            "truncation_order": self.truncation_order,
        }
        if with_gaps:
            payload["gaps"] = [g.to_dict() for g in self.gaps]
        return payload


def _left_planks(K: IntervalUnion, gaps: List[Interval]) -> List[Real]:
    planks: List[Real] = []
    stack: List[Interval] = []
    for gap in gaps:
        while stack and stack[-1].length < gap.length:
            stack.pop()
        start = stack[-1].hi if stack else K.lo
        planks.append(gap.lo - start)
        stack.append(gap)
    return planks


def _right_planks(K: IntervalUnion, gaps: List[Interval]) -> List[Real]:
    planks: List[Real] = []
    stack: List[Interval] = []
    for gap in reversed(gaps):
        while stack and stack[-1].length < gap.length:
            stack.pop()
        end = stack[-1].lo if stack else K.hi
        planks.append(end - gap.hi)
        stack.append(gap)
    planks.reverse()
    return planks


def thickness(K: IntervalUnion, truncation_order: Optional[int] = None) -> ThicknessReport:
    """Exact thickness report; τ = +∞ (math.inf) when K has no bounded gaps."""
    gaps = bounded_gaps(K)
    left = _left_planks(K, gaps)
    right = _right_planks(K, gaps)

    reports = [
        GapReport(gap=g, left_plank_len=l, right_plank_len=r,
                  local_tau=exact_div(min(l, r), g.length))
        for g, l, r in zip(gaps, left, right)
    ]
    tau = min((r.local_tau for r in reports), default=math.inf)
    gamma = max((g.length for g in gaps), default=0)
    return ThicknessReport(tau=tau, gamma=gamma, diam=diameter(K),
                           gaps=reports, truncation_order=truncation_order)
