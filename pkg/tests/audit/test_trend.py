#!/usr/bin/env python
# -*- coding: utf-8 -*-

import pytest

from cvibias.audit.enums import TrendScale
from cvibias.audit.runner import TrendCurve, TrendPoint
from cvibias.audit.trend import (TrendReason, TrendThresholds, assess_trend, classify_trend, detect_gt_bias,
                                 five_index_finding)
from cvibias.audit.validation import InvalidConfig
from cvibias.exceptions import IndexSetMismatch, InsufficientPoints
from cvibias.indices.enums import Direction, IndexId
from cvibias.theory.enums import BiasStatus


def _points(means, stderr):
    return [
        TrendPoint(c, mean, None if mean is None else stderr, 0 if mean is not None else 10)
        for c, mean in zip(range(2, 2 + len(means)), means)
    ]


def _curve(means, index_id=IndexId.RI, stderr=0.001, direction=Direction.MAX, value_range=(0.0, 1.0),
           rand_means=None):
    rand_points = _points(rand_means, stderr) if rand_means is not None else None

    return TrendCurve(
        index_id=index_id, points=_points(means, stderr), trials_per_c=10, fingerprint="0" * 12,
        direction=direction, n_objects=1000, label="synthetic", value_range=value_range,
        rand_points=rand_points)


def test_thresholds_defaults():
    """Default thresholds."""

    thresholds = TrendThresholds()

    assert thresholds.to_dict() == {"rho": 0.8, "flat": 0.01, "noise": 4.0, "scale": TrendScale.BOUNDS}


@pytest.mark.parametrize("kwargs", [{"rho": 0}, {"rho": 1.5}, {"flat": -0.1}, {"noise": -1}, {"scale": "log"}])
def test_thresholds_invalid(kwargs):
    """Out of range thresholds are rejected."""

    with pytest.raises(InvalidConfig):
        TrendThresholds(**kwargs)


def test_monotone_curves():
    """Clear monotone trends give a direction."""

    increasing = assess_trend(_curve([0.1, 0.2, 0.3, 0.4, 0.5]))

    assert increasing.status == BiasStatus.NCINC
    assert increasing.rho == pytest.approx(1.0)
    assert increasing.relative_range == pytest.approx(0.4)
    assert increasing.reason == TrendReason.MONOTONE
    assert not increasing.low_confidence

    assert classify_trend(_curve([0.5, 0.4, 0.3, 0.2, 0.1])) == BiasStatus.NCDEC


def test_minimized_index_flips_direction():
    """For indices where smaller is better the sign of the trend is flipped."""

    growing = _curve([10.0, 20.0, 30.0, 40.0], index_id=IndexId.MIRKIN, direction=Direction.MIN,
                     value_range=(0.0, 100.0))

    assert classify_trend(growing) == BiasStatus.NCDEC


def test_rand_transforms_use_rand_scale():
    """Gower-Legendre compresses the Rand scale near 1 but is classified like the Rand index."""

    ri_means = [0.952, 0.949, 0.946, 0.943, 0.940]
    gl_means = [2 * val / (1 + val) for val in ri_means]

    assert max(gl_means) - min(gl_means) < 0.01

    own_scale = assess_trend(_curve(gl_means, index_id=IndexId.GL))

    assert own_scale.status == BiasStatus.NCNEU
    assert own_scale.reason == TrendReason.FLAT

    rand_scale = assess_trend(_curve(gl_means, index_id=IndexId.GL, rand_means=ri_means))

    assert rand_scale.status == BiasStatus.NCDEC
    assert rand_scale.status == classify_trend(_curve(ri_means))
    assert rand_scale.relative_range == pytest.approx(0.012)

    mirkin_means = [1000.0 * 999 * (1 - val) for val in ri_means]
    mirkin = _curve(mirkin_means, index_id=IndexId.MIRKIN, direction=Direction.MIN,
                    value_range=(0.0, 1000.0 * 999), rand_means=ri_means)

    assert classify_trend(mirkin) == BiasStatus.NCDEC


def test_flat_curve():
    """Curves moving less than the flat threshold are neutral."""

    flat = assess_trend(_curve([0.500, 0.501, 0.502, 0.503, 0.504]))

    assert flat.status == BiasStatus.NCNEU
    assert flat.reason == TrendReason.FLAT
    assert flat.rho is None

    constant = assess_trend(_curve([0.3] * 5))

    assert constant.status == BiasStatus.NCNEU
    assert constant.relative_range == 0.0


def test_bounds_and_magnitude_scales():
    """A trend small against the index range may be large against its magnitude."""

    curve = _curve([0.010, 0.012, 0.014, 0.016, 0.018], value_range=(-1.0, 1.0), stderr=1e-5)

    assert classify_trend(curve) == BiasStatus.NCNEU
    assert classify_trend(curve, TrendThresholds(scale=TrendScale.MAGNITUDE)) == BiasStatus.NCINC

    unbounded = _curve([0.010, 0.012, 0.014, 0.016, 0.018], value_range=None, stderr=1e-5)

    assert classify_trend(unbounded) == BiasStatus.NCINC


def test_noise_curve():
    """Ranges within a few standard errors are noise."""

    noisy = assess_trend(_curve([0.40, 0.45, 0.42, 0.47, 0.44], stderr=0.05))

    assert noisy.status == BiasStatus.NCNEU
    assert noisy.reason == TrendReason.NOISE


def test_weak_curve():
    """Non-monotone curves are neutral with low confidence."""

    weak = assess_trend(_curve([0.1, 0.5, 0.1, 0.5, 0.1, 0.5]))

    assert weak.status == BiasStatus.NCNEU
    assert weak.reason == TrendReason.WEAK
    assert weak.low_confidence
    assert abs(weak.rho) < 0.8


def test_rho_threshold():
    """The correlation threshold is tunable."""

    curve = _curve([0.1, 0.3, 0.2, 0.4, 0.35, 0.5])

    assert classify_trend(curve, TrendThresholds(rho=0.8)) == BiasStatus.NCINC
    assert classify_trend(curve, TrendThresholds(rho=0.95)) == BiasStatus.NCNEU


def test_insufficient_points():
    """Curves need at least three defined points."""

    with pytest.raises(InsufficientPoints):
        assess_trend(_curve([0.1, 0.2]))

    with pytest.raises(InsufficientPoints):
        assess_trend(_curve([0.1, None, None, 0.2]))

    assert classify_trend(_curve([0.1, None, 0.2, 0.3])) == BiasStatus.NCINC


def test_detect_gt_bias():
    """Indices whose status changes between ground truths are flagged."""

    curves_a = [_curve([0.1, 0.2, 0.3, 0.4]), _curve([0.4, 0.3, 0.2, 0.1], index_id=IndexId.JI),
                _curve([0.5] * 4, index_id=IndexId.W1)]
    curves_b = [_curve([0.4, 0.3, 0.2, 0.1]), _curve([0.4, 0.3, 0.2, 0.1], index_id=IndexId.JI),
                _curve([0.5] * 4, index_id=IndexId.W1)]

    report = detect_gt_bias(curves_a, curves_b)

    assert report.flagged() == [IndexId.RI]
    assert report.is_flagged(IndexId.RI)
    assert not report.is_flagged(IndexId.W1)
    assert report.statuses[IndexId.RI] == (BiasStatus.NCINC, BiasStatus.NCDEC)
    assert report.undetermined == []

    rows = {row["index"]: row for row in report.rows()}

    assert rows[IndexId.RI]["gt_bias"]
    assert rows[IndexId.JI] == {"index": IndexId.JI, "status_a": BiasStatus.NCDEC,
                                "status_b": BiasStatus.NCDEC, "gt_bias": False}


def test_detect_gt_bias_undetermined():
    """Curves that cannot be classified are reported separately."""

    curves_a = [_curve([0.1, 0.2, 0.3]), _curve([None, None, None], index_id=IndexId.ARI)]
    curves_b = [_curve([0.3, 0.2, 0.1]), _curve([0.0, 0.0, 0.0], index_id=IndexId.ARI)]

    report = detect_gt_bias(curves_a, curves_b)

    assert report.flagged() == [IndexId.RI]
    assert report.undetermined == [IndexId.ARI]

    finding = five_index_finding(curves_a, curves_b)

    assert finding.changed == frozenset([IndexId.RI])
    assert finding.degenerate == frozenset([IndexId.ARI])


def test_detect_gt_bias_index_mismatch():
    """Both sides must hold the same indices."""

    with pytest.raises(IndexSetMismatch):
        detect_gt_bias([_curve([0.1, 0.2, 0.3])], [_curve([0.1, 0.2, 0.3], index_id=IndexId.JI)])
