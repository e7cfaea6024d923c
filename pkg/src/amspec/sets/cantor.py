"""
Finite-stage symmetric Cantor constructions used as calibration sets.

Each stage keeps the first and last `keep` fraction of every piece. keep=1/3
gives the middle-thirds construction (τ = 1), keep=1/4 the middle-halves
construction (τ = 1/2). In general τ = keep / (1 − 2·keep).
"""

from fractions import Fraction
from typing import List, Union

from .interval import Interval, IntervalUnion, Real, make_union


def middle_cantor(level: int, keep: Union[Fraction, int] = Fraction(1, 3),
                  lo: Real = 0, hi: Real = 1) -> IntervalUnion:
    """Level-n approximation of the symmetric Cantor set on [lo, hi]; exact for rational inputs."""
    keep = Fraction(keep)
    if level < 0:
        raise ValueError("level must be non-negative")
    if not 0 < keep < Fraction(1, 2):
        raise ValueError("keep must lie in (0, 1/2)")

    pieces: List[Interval] = [Interval(lo, hi)]
    for _ in range(level):
        nxt: List[Interval] = []
        for p in pieces:
            step = p.length * keep
            nxt.append(Interval(p.lo, p.lo + step))
            nxt.append(Interval(p.hi - step, p.hi))
        pieces = nxt
    return make_union(pieces)


def middle_thirds(level: int) -> IntervalUnion:
    return middle_cantor(level, Fraction(1, 3))


def middle_halves(level: int) -> IntervalUnion:
    return middle_cantor(level, Fraction(1, 4))


def expected_thickness(keep: Fraction) -> Fraction:
    keep = Fraction(keep)
    return keep / (1 - 2 * keep)
