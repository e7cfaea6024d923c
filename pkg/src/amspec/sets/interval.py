"""
Finite unions of closed intervals.

Endpoints may be any real Python numbers. When every endpoint is an int or a
Fraction, derived quantities (midpoints, ratios, sums) stay exact; floats stay
floats. Canonical form: parts sorted with parts[i].hi < parts[i+1].lo.
"""

from __future__ import annotations

import bisect
import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union

from ..errors import BadInterval, EmptyInput

Real = Union[int, float, Fraction]


def exact_div(a: Real, b: Real) -> Real:
    """a / b, kept as a Fraction when both operands are rational Python numbers."""
    if isinstance(a, numbers.Rational) and isinstance(b, numbers.Rational):
        return Fraction(a) / Fraction(b)
    return a / b


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi]; lo == hi is a single point."""

    lo: Real
    hi: Real

    def __post_init__(self):
        if self.lo > self.hi:
            raise BadInterval(f"interval has lo > hi: [{self.lo}, {self.hi}]", lo=self.lo, hi=self.hi)

    @property
    def length(self) -> Real:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Real:
        return exact_div(self.lo + self.hi, 2)

    def as_pair(self) -> Tuple[Real, Real]:
        return (self.lo, self.hi)


IntervalLike = Union[Interval, Sequence[Real]]


def _coerce(raw: IntervalLike) -> Interval:
    if isinstance(raw, Interval):
        return raw
    lo, hi = raw
    return Interval(lo, hi)


@dataclass(frozen=True)
class IntervalUnion:
    """Canonical finite union of disjoint closed intervals. Build it with make_union."""

    parts: Tuple[Interval, ...]

    def __post_init__(self):
        if not self.parts:
            raise EmptyInput("an interval union needs at least one part")
        for left, right in zip(self.parts, self.parts[1:]):
            if not left.hi < right.lo:
                raise BadInterval("parts are not strictly ordered; use make_union",
                                  left=left.as_pair(), right=right.as_pair())

    @property
    def lo(self) -> Real:
        return self.parts[0].lo

    @property
    def hi(self) -> Real:
        return self.parts[-1].hi

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __add__(self, other: 'IntervalUnion') -> 'IntervalUnion':
        return minkowski_sum(self, other)

    def pairs(self) -> List[Tuple[Real, Real]]:
        return [p.as_pair() for p in self.parts]

    def contains(self, x: Real) -> bool:
        idx = bisect.bisect_right([p.lo for p in self.parts], x) - 1
        return idx >= 0 and x <= self.parts[idx].hi

    def to_dict(self) -> Dict[str, Any]:
        return {"parts": [[float(p.lo), float(p.hi)] for p in self.parts]}

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> 'IntervalUnion':
        return make_union(payload["parts"])


def make_union(raw: Iterable[IntervalLike]) -> IntervalUnion:
    """Sort and merge overlapping or touching intervals into canonical form."""
    items = sorted((_coerce(r) for r in raw), key=lambda iv: (iv.lo, iv.hi))
    if not items:
        raise EmptyInput("make_union called with no intervals")

    merged: List[Interval] = []
    cur_lo, cur_hi = items[0].lo, items[0].hi
    for iv in items[1:]:
        if iv.lo <= cur_hi:
            if iv.hi > cur_hi:
                cur_hi = iv.hi
        else:
            merged.append(Interval(cur_lo, cur_hi))
            cur_lo, cur_hi = iv.lo, iv.hi
    merged.append(Interval(cur_lo, cur_hi))
    return IntervalUnion(tuple(merged))


def bounded_gaps(K: IntervalUnion) -> List[Interval]:
    """Open gaps (parts[i].hi, parts[i+1].lo), returned as Interval endpoints."""
    return [Interval(a.hi, b.lo) for a, b in zip(K.parts, K.parts[1:])]


def diameter(K: IntervalUnion) -> Real:
    return K.hi - K.lo


def is_interval(K: IntervalUnion) -> bool:
    return len(K.parts) == 1


def hull(K: IntervalUnion) -> Interval:
    return Interval(K.lo, K.hi)


def measure(K: IntervalUnion) -> Real:
    """Total length of the parts."""
    return sum((p.length for p in K.parts), 0)


def largest_gap(K: IntervalUnion) -> Real:
    """Γ(K): length of the longest bounded gap, 0 for an interval."""
    return max((g.length for g in bounded_gaps(K)), default=0)


def affine(K: IntervalUnion, a: Real, b: Real) -> IntervalUnion:
    """Image of K under x ↦ a·x + b, a > 0."""
    if not a > 0:
        raise BadInterval("affine map needs a positive scale", scale=a)
    return IntervalUnion(tuple(Interval(a * p.lo + b, a * p.hi + b) for p in K.parts))


def reflect(K: IntervalUnion) -> IntervalUnion:
    """Image of K under x ↦ −x."""
    return IntervalUnion(tuple(Interval(-p.hi, -p.lo) for p in reversed(K.parts)))


def merge_small_gaps(K: IntervalUnion, tol: Real) -> Tuple[IntervalUnion, int]:
    """Close every bounded gap shorter than tol; returns the new union and the count closed."""
    parts = list(K.parts)
    out: List[Interval] = [parts[0]]
    closed = 0
    for p in parts[1:]:
        if p.lo - out[-1].hi < tol:
            out[-1] = Interval(out[-1].lo, max(out[-1].hi, p.hi))
            closed += 1
        else:
            out.append(p)
    return IntervalUnion(tuple(out)), closed


def minkowski_sum(K1: IntervalUnion, K2: IntervalUnion) -> IntervalUnion:
    """Exact {x + y : x ∈ K1, y ∈ K2}."""
    return make_union(
        Interval(a.lo + b.lo, a.hi + b.hi) for a in K1.parts for b in K2.parts
    )


def iterated_sum(Ks: Sequence[IntervalUnion]) -> IntervalUnion:
    """Left fold K1 + K2 + ... + Kd."""
    if not Ks:
        raise EmptyInput("iterated_sum needs at least one set")
    total = Ks[0]
    for K in Ks[1:]:
        total = minkowski_sum(total, K)
    return total


def _dist_to(K: IntervalUnion, los: List[Real], x: Real) -> Real:
    idx = bisect.bisect_right(los, x) - 1
    best = None
    if idx >= 0:
        part = K.parts[idx]
        if x <= part.hi:
            return 0
        best = x - part.hi
    if idx + 1 < len(K.parts):
        d = K.parts[idx + 1].lo - x
        best = d if best is None else min(best, d)
    return best


def _one_sided(A: IntervalUnion, B: IntervalUnion) -> Real:
    """sup over x in A of dist(x, B), attained at endpoints of A or gap midpoints of B."""
    los = [p.lo for p in B.parts]
    mids = [g.midpoint for g in bounded_gaps(B)]
    best = 0
    for part in A.parts:
        candidates = [part.lo, part.hi]
        lo_i = bisect.bisect_left(mids, part.lo)
        hi_i = bisect.bisect_right(mids, part.hi)
        candidates.extend(mids[lo_i:hi_i])
        for x in candidates:
            d = _dist_to(B, los, x)
            if d > best:
                best = d
    return best


def hausdorff_distance(K1: IntervalUnion, K2: IntervalUnion) -> Real:
    """Exact Hausdorff distance between two canonical unions."""
    return max(_one_sided(K1, K2), _one_sided(K2, K1))
