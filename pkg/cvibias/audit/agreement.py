#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Comparison of the analytic bias prediction with the empirical trends
of the Rand index and the indices that are monotone functions of it.
"""

import logging

from cvibias.audit.runner import ExperimentRunner
from cvibias.audit.trend import classify_trend
from cvibias.indices.enums import IndexId
from cvibias.theory.predictors import predict_nc_bias

logger = logging.getLogger(__name__)

RI_FAMILY = [IndexId.RI, IndexId.MIRKIN, IndexId.H, IndexId.GL, IndexId.RT]

DEFAULT_NEAR_THRESHOLD = 0.02


class AgreementRecord(object):
    """Predicted verdict and per-index empirical statuses of one experiment."""

    def __init__(self, label, verdict, rows, curves=None):
        self.label = label
        self.verdict = verdict
        self.rows = rows
        self.curves = curves or []

    def __repr__(self):
        return "<AgreementRecord {} predicted={} mismatches={}>".format(
            self.label, self.verdict.status, [row["index"] for row in self.mismatches])

    @property
    def mismatches(self):
        """Rows where prediction and trend differ outside the near-threshold band."""

        return [row for row in self.rows if not row["match"] and not row["near_threshold"]]

    @property
    def near_threshold_cases(self):
        """Rows whose discriminant lies inside the near-threshold band."""

        return [row for row in self.rows if row["near_threshold"]]


def predict_vs_empirical(config, thresholds=None, near_threshold=DEFAULT_NEAR_THRESHOLD, workers=None):
    """Runs the experiment for the Rand index family and compares each
    empirical trend with the prediction from the realized ground truth distribution."""

    config = config.replace(indices=RI_FAMILY)
    runner = ExperimentRunner(config, workers=workers)
    verdict = predict_nc_bias(runner.ground_truth_distribution())
    near = abs(verdict.discriminant) < near_threshold
    curves = runner.run()
    rows = []

    for curve in curves:
        empirical = classify_trend(curve, thresholds=thresholds)
        match = empirical == verdict.status

        if not match and near:
            logger.warning("%s near threshold (discriminant %.3g): predicted %s, observed %s",
                           curve.index_id, verdict.discriminant, verdict.status, empirical)

        rows.append({
            "index": curve.index_id,
            "predicted": verdict.status,
            "empirical": empirical,
            "match": match,
            "near_threshold": near,
            "discriminant": verdict.discriminant
        })

    return AgreementRecord(config.label, verdict, rows, curves=curves)
