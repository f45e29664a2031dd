#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Analytic predictors of the number-of-clusters bias of the Rand index
(and of Mirkin, Hubert, Gower-Legendre and Rogers-Tanimoto, which are
strictly monotone functions of it) from the ground truth distribution.

All predictors reduce to the sign of the discriminant ``sum(p_i ** 2) - 1/2``:
a positive discriminant (quadratic entropy below 1) means the index prefers
fewer clusters, a negative one means it prefers more clusters.
"""

import math

from cvibias.exceptions import InvalidArgument
from cvibias.partition.crisp import ClusterDistribution
from cvibias.theory.entropy import quadratic_entropy
from cvibias.theory.enums import BiasStatus, VerdictSource

EQUALITY_TOLERANCE = 1e-12

PREDICTION_CAVEAT = (
    "Assumes balanced candidate partitions that are statistically "
    "independent of the ground truth")


class BiasVerdict(object):
    """Bias status together with the quantities it was derived from."""

    def __init__(self, status, discriminant, h2, source, caveat=PREDICTION_CAVEAT):
        self.status = status
        self.discriminant = discriminant
        self.h2 = h2
        self.source = source
        self.caveat = caveat

    def __repr__(self):
        return "<BiasVerdict {} ({}) disc={:.6g} h2={:.6g}>".format(
            self.status, self.source, self.discriminant, self.h2)

    def to_dict(self):
        """Returns the verdict as a dict."""

        return {
            "status": self.status,
            "source": self.source,
            "discriminant": self.discriminant,
            "h2": self.h2,
            "caveat": self.caveat
        }


def _status_from_discriminant(disc, tol=EQUALITY_TOLERANCE):
    if disc > tol:
        return BiasStatus.NCDEC

    if disc < -tol:
        return BiasStatus.NCINC

    return BiasStatus.NCNEU


def _check_cluster_count(r):
    if int(r) != r or r < 2:
        raise InvalidArgument("Number of ground truth clusters must be an integer >= 2 (got {})".format(r))


def predict_nc_bias(dist):
    """Predicts the bias status from the sign of sum(p_i ** 2) - 1/2."""

    disc = dist.sum_of_squares() - 0.5

    return BiasVerdict(
        _status_from_discriminant(disc), disc,
        quadratic_entropy(dist), VerdictSource.COROLLARY)


def predict_from_entropy(h2):
    """Predicts the bias status from the quadratic entropy of the ground truth alone,
    comparing it against 1."""

    if h2 < 0 or h2 > 2:
        raise InvalidArgument("Quadratic entropy must be in [0, 2] (got {})".format(h2))

    disc = (1.0 - h2) / 2.0

    return BiasVerdict(_status_from_discriminant(disc), disc, h2, VerdictSource.THEOREM_H2)


def predict_nc_bias_sorted(dist):
    """Predicts the bias status from the distribution sorted into descending order."""

    sorted_probs = dist.sorted().probs
    first, rest = sorted_probs[0], sorted_probs[1:]
    r = len(sorted_probs)
    disc = dist.sum_of_squares() - 0.5

    if r == 1:
        status = BiasStatus.NCDEC
    elif r == 2:
        balance = first * (first - 0.5) - rest[0] * (0.5 - rest[0])
        status = BiasStatus.NCDEC if balance > EQUALITY_TOLERANCE else BiasStatus.NCNEU
    else:
        balance = first * (first - 0.5) - math.fsum(val * (0.5 - val) for val in rest)
        status = _status_from_discriminant(balance)

    return BiasVerdict(status, disc, quadratic_entropy(dist), VerdictSource.THEOREM_SORTED)


def gt2_threshold(r):
    """Skew p* of the first cluster above which the Rand index prefers fewer clusters
    when the other r - 1 clusters share the rest equally."""

    _check_cluster_count(r)

    return (2.0 + math.sqrt(2.0 * (r - 1) * (r - 2))) / (2.0 * r)


def skew_distribution(r, p1):
    """Distribution with a first cluster of probability p1 and r - 1 equal clusters."""

    _check_cluster_count(r)

    if not (0.0 < p1 < 1.0):
        raise InvalidArgument("Skew must be in (0, 1) (got {})".format(p1))

    return ClusterDistribution([p1] + [(1.0 - p1) / (r - 1)] * (r - 1))


def predict_gt1(r):
    """Bias status for a ground truth of r balanced clusters."""

    _check_cluster_count(r)

    return BiasStatus.NCNEU if r == 2 else BiasStatus.NCINC


def predict_gt2(r, p1):
    """Bias status for a ground truth with a first cluster of probability p1."""

    _check_cluster_count(r)

    if not (0.0 < p1 < 1.0):
        raise InvalidArgument("Skew must be in (0, 1) (got {})".format(p1))

    if r == 2:
        return BiasStatus.NCNEU if abs(p1 - 0.5) <= EQUALITY_TOLERANCE else BiasStatus.NCDEC

    return _status_from_discriminant(p1 - gt2_threshold(r))


def gt1_verdict(r):
    """Full verdict for a ground truth of r balanced clusters."""

    status = predict_gt1(r)
    dist = ClusterDistribution.balanced(r)

    return BiasVerdict(status, dist.sum_of_squares() - 0.5, quadratic_entropy(dist), VerdictSource.GT1)


def gt2_verdict(r, p1):
    """Full verdict for a ground truth with a first cluster of probability p1."""

    status = predict_gt2(r, p1)
    dist = skew_distribution(r, p1)

    return BiasVerdict(status, dist.sum_of_squares() - 0.5, quadratic_entropy(dist), VerdictSource.GT2)
