"""
Continued-fraction machinery: convergents, certified partial quotients of
decimal frequencies, exact rational approximants and fractional parts of
multiples of α.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, List, Tuple

from mpmath import mp, mpf

from ..errors import PrecisionExhausted
from .frequency import DECIMAL, QUADRATIC, RATIONAL, FrequencySpec, Rational


def certified_partial_quotients(spec: FrequencySpec) -> Iterator[int]:
    """
    Partial quotients of a decimal frequency, certified by running the continued
    fraction on both ends of its ±½-ulp enclosure. Stops with PrecisionExhausted
    as soon as the two ends disagree.
    """
    lo, hi = spec.decimal_bounds()
    index = 0
    while True:
        a = math.floor(lo)
        if math.floor(hi) != a:
            raise PrecisionExhausted(
                f"{spec.digits} cannot certify partial quotient #{index}",
                digits=spec.digits, index=index)
        yield a
        lo, hi = lo - a, hi - a
        if lo <= 0:
            raise PrecisionExhausted(
                f"{spec.digits} cannot certify partial quotient #{index + 1}",
                digits=spec.digits, index=index + 1)
        lo, hi = 1 / hi, 1 / lo
        index += 1


def convergents(spec: FrequencySpec, depth: int) -> List[Rational]:
    """
    First `depth` convergents p_k/q_k via p_k = a_k p_{k-1} + p_{k-2}.

    Rational inputs stop early at their last convergent. Convergents are not
    reduced mod 1 (the golden mean gives 0/1, 1/1, 1/2, 2/3, ...).
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    out: List[Rational] = []
    p_prev, p_cur = 0, 1
    q_prev, q_cur = 1, 0
    for a in spec.partial_quotients():
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        out.append(Rational(p_cur, q_cur))
        if len(out) >= depth:
            break
    return out


def convergent_at(spec: FrequencySpec, order: int) -> Tuple[Rational, int]:
    """The order-th convergent (0-based) and the index actually reached."""
    cvs = convergents(spec, order + 1)
    return cvs[-1], len(cvs) - 1


def rational_approximant(spec: FrequencySpec, digits: int) -> Tuple[Fraction, Fraction]:
    """
    Exact rational approximant of α with a certified error bound.

    Quadratic irrationals: the first convergent with q_k^2 >= 10^digits, error < 1/q_k^2.
    Decimals: the stored value, error = half a unit in the last place.
    Rationals: exact, error 0.
    """
    if spec.kind == RATIONAL:
        return spec.rational.as_fraction(), Fraction(0)
    if spec.kind == DECIMAL:
        lo, hi = spec.decimal_bounds()
        return (lo + hi) / 2, (hi - lo) / 2
    target = 10 ** digits
    p_prev, p_cur = 0, 1
    q_prev, q_cur = 1, 0
    for a in spec.partial_quotients():
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        if q_cur * q_cur >= target:
            break
    return Fraction(p_cur, q_cur), Fraction(1, q_cur * q_cur)


def value(spec: FrequencySpec, dps: int = 50) -> mpf:
    """α as an mpmath number at `dps` decimal digits."""
    approx, _ = rational_approximant(spec, dps + 5)
    with mp.workdps(dps):
        return mpf(approx.numerator) / approx.denominator


def label_targets(spec: FrequencySpec, n_max: int) -> List[Tuple[int, float]]:
    """(n, frac(nα)) for n = -n_max..n_max, n != 0, dropping values equal to 0."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    approx, _ = rational_approximant(spec, 40)
    out: List[Tuple[int, float]] = []
    for n in range(-n_max, n_max + 1):
        if n == 0:
            continue
        x = n * approx
        frac = x - math.floor(x)
        if frac != 0:
            out.append((n, float(frac)))
    return out


def frac_multiples(spec: FrequencySpec, n_max: int) -> List[float]:
    """frac(nα) for n = -n_max..n_max, n != 0, in order of n; zero values are not gap labels and are dropped."""
    return [v for _, v in label_targets(spec, n_max)]
