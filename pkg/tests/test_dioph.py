"""
Tests for frequency parsing, continued fractions and Diophantine constants.
"""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from mpmath import mp, mpf, sqrt

from amspec.dioph import (
    GOLDEN_MEAN, PLAIN, TWO_PI, Rational, convergent_at, convergents, dc_constants,
    frac_multiples, label_targets, parse_frequency, parse_rational, rational_approximant,
    rational_spec, value,
)
from amspec.errors import FrequencyParseError, PrecisionExhausted, RationalInput

GOLDEN_DIGITS = "0.61803398874989484820458683436563811772"


def test_golden_convergents():
    cvs = convergents(GOLDEN_MEAN, 8)
    assert [str(r) for r in cvs] == ["0/1", "1/1", "1/2", "2/3", "3/5", "5/8", "8/13", "13/21"]
    assert convergent_at(GOLDEN_MEAN, 6) == (Rational(8, 13), 6)


def test_rational_input_terminates():
    cvs = convergents(parse_frequency("13/21"), 50)
    assert cvs[-1] == Rational(13, 21)
    assert len(cvs) < 50
    r, reached = convergent_at(parse_frequency("13/21"), 40)
    assert r == Rational(13, 21) and reached == len(cvs) - 1


@pytest.mark.parametrize("text", ["[0;(1)]", "[0;(2)]", "[0;1,(1,2)]", GOLDEN_DIGITS])
def test_convergent_determinant_identity(text):
    cvs = convergents(parse_frequency(text), 12)
    for k in range(1, len(cvs)):
        prev, cur = cvs[k - 1], cvs[k]
        assert cur.p * prev.q - prev.p * cur.q == (-1) ** (k + 1)


def test_convergents_approximate_alpha():
    with mp.workdps(40):
        alpha = (sqrt(5) - 1) / 2
        cvs = convergents(GOLDEN_MEAN, 20)
        for cur, nxt in zip(cvs, cvs[1:]):
            assert abs(alpha - mpf(cur.p) / cur.q) < mpf(1) / (cur.q * nxt.q)


def test_value_of_golden_mean():
    with mp.workdps(30):
        assert abs(value(GOLDEN_MEAN, 30) - (sqrt(5) - 1) / 2) < mpf(10) ** -28


def test_parse_forms():
    assert parse_frequency("3/6").rational == Rational(1, 2)
    assert parse_frequency("[0;(1)]").period == (1,)
    assert parse_frequency("[0;2,(1,3)]").preamble == (0, 2)
    dec = parse_frequency("0.25")
    assert dec.decimal_bounds() == (Fraction(49, 200), Fraction(51, 200))
    assert parse_rational("-2/4") == Rational(-1, 2)


@pytest.mark.parametrize("text", ["1/0", "abc", "[0;()]", "1/2/3", ""])
def test_parse_errors(text):
    with pytest.raises(FrequencyParseError):
        parse_frequency(text)


def test_decimal_quotients_run_out():
    spec = parse_frequency(GOLDEN_DIGITS)
    assert convergents(spec, 20)[-1] == Rational(4181, 6765)
    with pytest.raises(PrecisionExhausted):
        convergents(spec, 200)


def test_rational_approximant_error_bound():
    approx, err = rational_approximant(GOLDEN_MEAN, 20)
    assert err <= Fraction(1, 10 ** 20)
    assert rational_approximant(rational_spec(2, 7), 20) == (Fraction(2, 7), 0)


def test_frac_multiples_drop_zero():
    assert sorted(frac_multiples(rational_spec(1, 2), 2)) == [0.5, 0.5]
    targets = dict(label_targets(GOLDEN_MEAN, 3))
    assert targets[1] == pytest.approx(0.6180339887, abs=1e-10)
    assert targets[-1] == pytest.approx(0.3819660113, abs=1e-10)
    with pytest.raises(ValueError):
        label_targets(GOLDEN_MEAN, 0)


@given(st.integers(1, 200))
def test_frac_multiples_pair_to_one(n):
    targets = dict(label_targets(GOLDEN_MEAN, n))
    assert targets[n] + targets[-n] == pytest.approx(1.0, abs=1e-12)


def test_dc_golden_mean():
    report = dc_constants(GOLDEN_MEAN, 2.0, 1000)
    assert report.c_best == pytest.approx(0.381966, abs=1e-6)
    assert report.argmin_q == 1
    fib = [q for q, _ in report.convergent_profile]
    assert 987 in fib
    assert all(0.38 <= v <= 0.48 for _, v in report.convergent_profile)


def test_dc_is_monotone_in_t_and_q_max():
    by_t = [dc_constants(GOLDEN_MEAN, t, 500).c_best for t in (1.5, 2.0, 2.5, 3.0)]
    assert by_t == sorted(by_t)
    by_q = [dc_constants(parse_frequency("[0;(2)]"), 2.0, q).c_best for q in (10, 100, 1000)]
    assert by_q == sorted(by_q, reverse=True)


def test_dc_two_pi_normalization():
    report = dc_constants(GOLDEN_MEAN, 2.0, 1, normalization=TWO_PI)
    assert report.normalization == TWO_PI
    assert report.c_best == pytest.approx(0.6180339887, abs=1e-9)


def test_dc_rejects_rational_and_bad_arguments():
    with pytest.raises(RationalInput):
        dc_constants(rational_spec(1, 2), 2.0, 100)
    with pytest.raises(ValueError):
        dc_constants(GOLDEN_MEAN, 1.0, 100)
    with pytest.raises(ValueError):
        dc_constants(GOLDEN_MEAN, 2.0, 0)
    with pytest.raises(ValueError):
        dc_constants(GOLDEN_MEAN, 2.0, 10, normalization="other")


def test_dc_short_decimal_cannot_certify():
    with pytest.raises(PrecisionExhausted):
        dc_constants(parse_frequency("0.618034"), 2.0, 100_000)


def test_dc_long_decimal_matches_quadratic():
    dec = dc_constants(parse_frequency(GOLDEN_DIGITS), 2.0, 1000, normalization=PLAIN)
    exact = dc_constants(GOLDEN_MEAN, 2.0, 1000)
    assert dec.c_best == pytest.approx(exact.c_best, rel=1e-9)
    assert dec.argmin_q == exact.argmin_q
