#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Classification of empirical trend curves into bias statuses and
detection of ground truth bias between two sets of curves.

A curve is neutral when its means barely move (relative to the value
range of the index) or move no more than the Monte Carlo noise allows.
Otherwise the Spearman rank correlation between the cluster count and the
mean decides, with the sign flipped for indices that are minimized.

Indices that are strictly monotone functions of the Rand index are
classified on the Rand scale, so they always share its status.
"""

import logging

import numpy as np
from scipy.stats import spearmanr

from cvibias.audit.enums import TrendScale
from cvibias.audit.validation import SCHEMA_TREND_THRESHOLDS, validate_document
from cvibias.exceptions import IndexSetMismatch, InsufficientPoints
from cvibias.indices.enums import Direction
from cvibias.theory.enums import BiasStatus

logger = logging.getLogger(__name__)

MIN_TREND_POINTS = 3

RAND_VALUE_RANGE = (0.0, 1.0)


class TrendReason(object):
    """Why a curve got its status."""

    FLAT = "flat"
    NOISE = "noise"
    UNDEFINED = "undefined"
    WEAK = "weak"
    MONOTONE = "monotone"


class TrendThresholds(object):
    """Tunable thresholds of the trend classifier."""

    DEFAULT_RHO = 0.8
    DEFAULT_FLAT = 0.01
    DEFAULT_NOISE = 4.0
    DEFAULT_SCALE = TrendScale.BOUNDS

    def __init__(self, rho=DEFAULT_RHO, flat=DEFAULT_FLAT, noise=DEFAULT_NOISE, scale=DEFAULT_SCALE):
        validate_document({"rho": rho, "flat": flat, "noise": noise, "scale": scale}, SCHEMA_TREND_THRESHOLDS)

        self.rho = float(rho)
        self.flat = float(flat)
        self.noise = float(noise)
        self.scale = scale

    def __repr__(self):
        return "<TrendThresholds {}>".format(self.to_dict())

    def to_dict(self):
        return {"rho": self.rho, "flat": self.flat, "noise": self.noise, "scale": self.scale}


class TrendAssessment(object):
    """Bias status of a curve with the statistics behind it."""

    def __init__(self, index_id, status, rho, relative_range, low_confidence, reason):
        self.index_id = index_id
        self.status = status
        self.rho = rho
        self.relative_range = relative_range
        self.low_confidence = low_confidence
        self.reason = reason

    def __repr__(self):
        return "<TrendAssessment {} {} ({})>".format(self.index_id, self.status, self.reason)

    def to_dict(self):
        return {
            "index": self.index_id,
            "status": self.status,
            "rho": self.rho,
            "relative_range": self.relative_range,
            "low_confidence": self.low_confidence,
            "reason": self.reason
        }


def _relative_range(means, value_range, scale):
    span = float(np.max(means) - np.min(means))

    if scale == TrendScale.BOUNDS and value_range is not None:
        low, high = value_range
        denom = high - low
    else:
        denom = float(np.max(np.abs(means)))

    if denom == 0:
        return 0.0 if span == 0 else float("inf")

    return span / denom


def _classified_points(curve):
    if curve.rand_points is not None:
        points = [point for point in curve.rand_points if point.is_defined]
        return points, Direction.MAX, RAND_VALUE_RANGE

    return curve.defined_points(), curve.direction, curve.value_range


def assess_trend(curve, thresholds=None):
    """Classifies a trend curve and reports the statistics used.
    Curves of Rand index transforms are classified on the Rand scale, so
    the whole family shares one status per experiment.
    The reported rho and relative range are then those of the Rand scale."""

    thresholds = thresholds or TrendThresholds()
    points, direction, value_range = _classified_points(curve)

    if len(points) < MIN_TREND_POINTS:
        raise InsufficientPoints("{} has {} usable points".format(curve.index_id, len(points)))

    cs = np.array([point.c for point in points], dtype=float)
    means = np.array([point.mean for point in points], dtype=float)
    span = float(np.max(means) - np.min(means))
    rel = _relative_range(means, value_range, thresholds.scale)

    def _result(status, rho=None, low_confidence=False, reason=TrendReason.MONOTONE):
        return TrendAssessment(curve.index_id, status, rho, rel, low_confidence, reason)

    if rel < thresholds.flat:
        return _result(BiasStatus.NCNEU, reason=TrendReason.FLAT)

    mean_stderr = float(np.mean([point.stderr for point in points]))

    if span <= thresholds.noise * mean_stderr:
        return _result(BiasStatus.NCNEU, reason=TrendReason.NOISE)

    rho = float(spearmanr(cs, means)[0])

    if np.isnan(rho):
        return _result(BiasStatus.NCNEU, reason=TrendReason.UNDEFINED)

    if direction == Direction.MIN:
        rho = -rho

    if rho >= thresholds.rho:
        return _result(BiasStatus.NCINC, rho=rho)

    if rho <= -thresholds.rho:
        return _result(BiasStatus.NCDEC, rho=rho)

    return _result(BiasStatus.NCNEU, rho=rho, low_confidence=True, reason=TrendReason.WEAK)


def classify_trend(curve, thresholds=None):
    """Returns the bias status of a trend curve."""

    return assess_trend(curve, thresholds=thresholds).status


class GtBiasReport(object):
    """Per-index statuses under two ground truths.
    An index has ground truth bias when the two statuses differ.
    Indices that cannot be classified under either ground truth are undetermined."""

    def __init__(self, statuses, undetermined=None):
        self.statuses = dict(statuses)
        self.undetermined = sorted(undetermined or [])

    def __repr__(self):
        return "<GtBiasReport flagged={}>".format(self.flagged())

    def is_flagged(self, index_id):
        status_a, status_b = self.statuses[index_id]
        return status_a != status_b

    def flagged(self):
        """Ids of the indices with ground truth bias, in input order."""

        return [index_id for index_id in self.statuses if self.is_flagged(index_id)]

    def rows(self):
        """One dict per classified index."""

        return [{
            "index": index_id,
            "status_a": status_a,
            "status_b": status_b,
            "gt_bias": status_a != status_b
        } for index_id, (status_a, status_b) in self.statuses.items()]


def _by_index(curves):
    return {curve.index_id: curve for curve in curves}


def detect_gt_bias(curves_a, curves_b, thresholds=None):
    """Classifies both sets of curves and flags the indices whose status changes."""

    by_a, by_b = _by_index(curves_a), _by_index(curves_b)

    if set(by_a) != set(by_b):
        raise IndexSetMismatch("Indices only on one side: {}".format(
            sorted(set(by_a).symmetric_difference(by_b))))

    statuses = {}
    undetermined = []

    for index_id in by_a:
        try:
            statuses[index_id] = (
                classify_trend(by_a[index_id], thresholds=thresholds),
                classify_trend(by_b[index_id], thresholds=thresholds))
        except InsufficientPoints as ex:
            logger.warning("Skipping %s: %s", index_id, ex)
            undetermined.append(index_id)

    return GtBiasReport(statuses, undetermined=undetermined)


class IndexFinding(object):
    """Indices whose status changes between two ground truths, and the ones that could not be classified."""

    def __init__(self, changed, degenerate):
        self.changed = frozenset(changed)
        self.degenerate = frozenset(degenerate)

    def __repr__(self):
        return "<IndexFinding changed={} degenerate={}>".format(sorted(self.changed), sorted(self.degenerate))


def five_index_finding(curves_a, curves_b, thresholds=None):
    """Summarizes which indices change status between two ground truths."""

    report = detect_gt_bias(curves_a, curves_b, thresholds=thresholds)

    return IndexFinding(report.flagged(), report.undetermined)
