"""
Tests for the bound calculators and the gap-decay fit.
"""

import math

import pytest
from hypothesis import given, strategies as st

from amspec.amo import AmoParams, SpectrumResult
from amspec.bounds import (
    AUDIT_COLUMNS, BoundParams, LabeledSpectrum, audit_lower_bound, fit_gap_decay,
    gap_length_bound, kappa, perturbation_bounds, thickness_lower_bound,
)
from amspec.dioph import Rational
from amspec.errors import InsufficientLabels
from amspec.ids import GapLabelAssignment
from amspec.sets import bounded_gaps, make_union


def _labeled(lam, lengths, labels=None):
    """Bands of length 1 separated by gaps of the given lengths, labeled 1, 2, ..."""
    parts, x = [], 0.0
    for g in lengths:
        parts.append((x, x + 1.0))
        x += 1.0 + g
    parts.append((x, x + 1.0))
    union = make_union(parts)
    spectrum = SpectrumResult(params=AmoParams(lam, Rational(1, len(parts))), approx_order=0,
                              union=union, phase_union=True, edge_tol=1e-10, gap_close_tol=1e-12)
    labels = labels or list(range(1, len(lengths) + 1))
    assignments = [GapLabelAssignment(gap_index=i, gap=g, label_n=n, ids_value=0.0,
                                      residual=0.0, candidate_n=n or 1)
                   for i, (g, n) in enumerate(zip(bounded_gaps(union), labels))]
    return LabeledSpectrum(lam=lam, spectrum=spectrum, labels=assignments)


def test_perturbation_bounds():
    assert perturbation_bounds(0.0) == (0.0, 0.0)
    assert perturbation_bounds(0.1) == pytest.approx((0.2, 0.4))
    assert perturbation_bounds(-0.1) == pytest.approx((0.2, 0.4))


def test_gap_length_bound():
    params = BoundParams(v_norm=1e-3, r0=1.0, r=0.5)
    assert gap_length_bound(params, 1) == pytest.approx(4.3214e-4, rel=1e-4)
    assert gap_length_bound(params, -1) == gap_length_bound(params, 1)
    assert gap_length_bound(params, 3) < gap_length_bound(params, 2)
    with pytest.raises(ValueError):
        gap_length_bound(params, 0)


@pytest.mark.parametrize("kwargs,kap,expected", [
    ({"h": 1.0}, 1.0, math.e / 2),
    ({"h": 1.0, "c": 2.0}, 1.0, math.e),
    ({}, 1.0, math.e / 4),
    ({"h": 1.0, "t": 3.0, "C_lambda": 0.5, "C_E": 2.0}, 0.5, 2 * math.e),
])
def test_thickness_lower_bound_hand_values(kwargs, kap, expected):
    assert thickness_lower_bound(BoundParams(**kwargs), kap) == pytest.approx(expected, abs=1e-12)


def test_thickness_lower_bound_rejects_nonpositive_kappa():
    with pytest.raises(ValueError):
        thickness_lower_bound(BoundParams(), 0.0)


def test_kappa_inverts_envelope():
    params = BoundParams(C_E=1.7, C_lambda=0.3)
    for k in (0.5, 2.0, 7.0):
        length = params.C_lambda * math.exp(-params.C_E * k)
        assert kappa(params, length) == pytest.approx(k, rel=1e-12)
    with pytest.raises(ValueError):
        kappa(params, 0.0)


positive = st.floats(0.1, 5.0)


@given(positive, positive, positive, positive, st.floats(0.2, 3.0))
def test_thickness_lower_bound_monotonicity(c, C_H, C_E, C_lambda, k):
    base = BoundParams(c=c, C_H=C_H, C_E=C_E, C_lambda=C_lambda)
    value = thickness_lower_bound(base, k)

    def bumped(**change):
        fields = base.to_dict()
        fields.update(change)
        return thickness_lower_bound(BoundParams(**fields), k)

    assert bumped(c=c * 1.01) > value
    assert bumped(C_H=C_H * 1.01) < value
    assert bumped(C_lambda=C_lambda * 1.01) < value
    assert bumped(C_E=C_E * 1.01) > value


@pytest.mark.parametrize("kwargs", [
    {"t": 1.0}, {"h": 0.0}, {"h": 1.5}, {"c": 0.0}, {"r": 1.0}, {"b": 0},
])
def test_bound_params_validation(kwargs):
    with pytest.raises(ValueError):
        BoundParams(**kwargs)


def test_gap_decay_fit_recovers_rate():
    sweep = [_labeled(lam, [lam * math.exp(-2.0 * n) for n in (1, 2, 3)]) for lam in (0.3, 0.2, 0.1)]
    fit = fit_gap_decay(sweep, threads=2)
    assert fit.C_E_hat == pytest.approx(2.0, rel=1e-9)
    for lam in (0.1, 0.2, 0.3):
        assert fit.C_lambda[lam] == pytest.approx(lam, rel=1e-9)
        for n, g in fit.pairs[lam]:
            assert g <= fit.C_lambda[lam] * math.exp(-fit.C_E_hat * n) * (1 + 1e-12)
    assert fit.decreasing_to_zero
    assert [row["lambda"] for row in fit.to_dict()["per_lambda"]] == [0.1, 0.2, 0.3]


def test_gap_decay_rate_floor():
    sweep = [_labeled(lam, [0.01 * n for n in (1, 2, 3)]) for lam in (0.3, 0.2, 0.1)]
    assert fit_gap_decay(sweep).C_E_hat == 1e-6


def test_gap_decay_needs_enough_data():
    good = [_labeled(lam, [math.exp(-n) for n in (1, 2, 3)]) for lam in (0.3, 0.2)]
    with pytest.raises(InsufficientLabels):
        fit_gap_decay(good)
    short = good + [_labeled(0.1, [0.1, 0.01])]
    with pytest.raises(InsufficientLabels):
        fit_gap_decay(short)
    same_n = good + [_labeled(0.1, [0.1, 0.2, 0.3], labels=[1, -1, 1])]
    with pytest.raises(InsufficientLabels):
        fit_gap_decay(same_n)


def test_unlabeled_gaps_are_ignored():
    item = _labeled(0.2, [0.1, 0.01, 0.001], labels=[1, None, 3])
    assert item.decay_pairs() == [(1, pytest.approx(0.1)), (3, pytest.approx(0.001))]


def test_audit_lower_bound_frame():
    sweep = [_labeled(lam, [lam * math.exp(-n) for n in (1, 2, 3)]) for lam in (0.3, 0.2, 0.1)]
    fit = fit_gap_decay(sweep)
    frame = audit_lower_bound(sweep, fit, c=0.38, C_H=1.0)
    assert list(frame.columns) == AUDIT_COLUMNS
    assert len(frame) == 9
    assert (frame["kappa"] > 0).all()
    assert frame["bound_below_tau"].dtype == bool
    assert frame["conditional_on_regime"].all()
