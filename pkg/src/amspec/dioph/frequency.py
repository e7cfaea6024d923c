"""
Frequency specifications: rationals, quadratic irrationals given by a periodic
continued fraction, and decimal strings with finite precision.

Accepted grammar (CLI and config files):
    p/q                       rational, q > 0
    [a0;a1,...,(b1,...,bk)]   periodic continued fraction, k >= 1
    0.6180339887...           decimal string; the last digit is uncertain by ±1/2
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Iterator, Optional, Tuple

from ..errors import FrequencyParseError

RATIONAL = "rational"
QUADRATIC = "quadratic"
DECIMAL = "decimal"

_RATIONAL_RE = re.compile(r'^\s*(-?\d+)\s*/\s*(-?\d+)\s*$')
_CF_RE = re.compile(r'^\s*\[\s*(-?\d+)\s*;\s*([\d\s,]*?)\s*,?\s*\(\s*([\d\s,]+)\s*\)\s*\]\s*$')
_DECIMAL_RE = re.compile(r'^\s*-?\d*\.?\d+\s*$')


@dataclass(frozen=True)
class Rational:
    """Reduced fraction p/q with q >= 1."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 1:
            raise FrequencyParseError(f"denominator must be positive: {self.p}/{self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise FrequencyParseError(f"fraction is not reduced: {self.p}/{self.q}")

    @classmethod
    def of(cls, p: int, q: int) -> 'Rational':
        if q == 0:
            raise FrequencyParseError(f"zero denominator in {p}/{q}")
        if q < 0:
            p, q = -p, -q
        g = math.gcd(p, q) or 1
        return cls(p // g, q // g)

    def mod_one(self) -> 'Rational':
        """The same frequency taken mod 1, 0 <= p < q."""
        return Rational(self.p % self.q, self.q)

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __float__(self) -> float:
        return self.p / self.q

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class FrequencySpec:
    """A frequency α given exactly (rational, periodic CF) or by decimal digits."""

    kind: str
    rational: Optional[Rational] = None
    preamble: Tuple[int, ...] = ()
    period: Tuple[int, ...] = ()
    digits: Optional[str] = None
    text: str = field(default="", compare=False)

    def __post_init__(self):
        if self.kind == QUADRATIC and not self.period:
            raise FrequencyParseError("periodic continued fraction needs a non-empty repeating block")
        if self.kind == QUADRATIC and any(a < 1 for a in self.preamble[1:] + self.period):
            raise FrequencyParseError("partial quotients after a0 must be positive")

    @property
    def is_rational(self) -> bool:
        return self.kind == RATIONAL

    def partial_quotients(self) -> Iterator[int]:
        """Partial quotients a0, a1, ... (finite for rationals and decimals)."""
        if self.kind == QUADRATIC:
            yield from self.preamble
            while True:
                yield from self.period
        elif self.kind == RATIONAL:
            yield from _cf_of_fraction(self.rational.as_fraction())
        else:
            from .continued import certified_partial_quotients
            yield from certified_partial_quotients(self)

    def decimal_bounds(self) -> Tuple[Fraction, Fraction]:
        """Exact enclosure [x − ½ulp, x + ½ulp] of a decimal frequency."""
        value = Fraction(Decimal(self.digits))
        decimals = len(self.digits.split('.')[1]) if '.' in self.digits else 0
        half_ulp = Fraction(1, 2 * 10 ** decimals)
        return value - half_ulp, value + half_ulp

    @property
    def significant_digits(self) -> int:
        if self.digits is None:
            return 0
        return len(self.digits.replace('-', '').replace('.', '').lstrip('0'))

    def to_float(self) -> float:
        from .continued import rational_approximant
        approx, _ = rational_approximant(self, 40)
        return float(approx)

    def __str__(self) -> str:
        if self.text:
            return self.text
        if self.kind == RATIONAL:
            return str(self.rational)
        if self.kind == QUADRATIC:
            head = ",".join(str(a) for a in self.preamble[1:])
            body = ",".join(str(b) for b in self.period)
            sep = "," if head else ""
            return f"[{self.preamble[0]};{head}{sep}({body})]"
        return self.digits


def _cf_of_fraction(x: Fraction) -> Iterator[int]:
    while True:
        a = math.floor(x)
        yield a
        rest = x - a
        if rest == 0:
            return
        x = 1 / rest


def parse_rational(text: str) -> Rational:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise FrequencyParseError(f"malformed rational '{text}', expected p/q")
    p, q = int(m.group(1)), int(m.group(2))
    if q == 0:
        raise FrequencyParseError(f"malformed rational '{text}': zero denominator")
    return Rational.of(p, q)


def parse_frequency(text: str) -> FrequencySpec:
    """Parse 'p/q', '[a0;a1,(b1,b2)]' or a decimal string."""
    raw = text.strip()
    if '/' in raw:
        return FrequencySpec(kind=RATIONAL, rational=parse_rational(raw), text=raw)

    m = _CF_RE.match(raw)
    if m:
        head = [int(s) for s in re.split(r'[\s,]+', m.group(2).strip()) if s]
        period = [int(s) for s in re.split(r'[\s,]+', m.group(3).strip()) if s]
        return FrequencySpec(kind=QUADRATIC, preamble=tuple([int(m.group(1))] + head),
                             period=tuple(period), text=raw)

    if _DECIMAL_RE.match(raw):
        try:
            Decimal(raw)
        except InvalidOperation as exc:
            raise FrequencyParseError(f"malformed decimal frequency '{text}'") from exc
        return FrequencySpec(kind=DECIMAL, digits=raw, text=raw)

    raise FrequencyParseError(
        f"cannot parse frequency '{text}'; use p/q, [a0;a1,(b1,b2)] or a decimal string")


def rational_spec(p: int, q: int) -> FrequencySpec:
    r = Rational.of(p, q)
    return FrequencySpec(kind=RATIONAL, rational=r, text=str(r))


GOLDEN_MEAN = FrequencySpec(kind=QUADRATIC, preamble=(0,), period=(1,), text="[0;(1)]")
