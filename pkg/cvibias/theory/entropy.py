#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Havrda-Charvat entropies of cluster distributions and contingency tables,
and the variation of information built on them.
"""

import math

from cvibias.exceptions import InvalidArgument, InvalidBeta


def _check_beta(beta):
    if not beta > 0:
        raise InvalidBeta("Entropy order must be positive (got {})".format(beta))


def _entropy_of_probs(probs, beta):
    _check_beta(beta)

    probs = [float(val) for val in probs if val > 0]

    if beta == 1:
        return -math.fsum(val * math.log2(val) for val in probs)

    return (1.0 - math.fsum(val ** beta for val in probs)) / (1.0 - 2.0 ** (1.0 - beta))


def _probs_of_counts(counts, total):
    total = float(total)

    return [val / total for val in counts if val > 0]


def _joint_probs(table):
    return _probs_of_counts(table.counts.ravel().tolist(), table.total)


def _quadratic_of_probs(probs):
    return 2.0 * (1.0 - math.fsum(val * val for val in probs))


def havrda_charvat_entropy(dist, beta):
    """H_beta of a cluster distribution. Order 1 is the base 2 Shannon entropy."""

    return _entropy_of_probs(dist, beta)


def quadratic_entropy(dist):
    """H_2 = 2 * (1 - sum(p_i ** 2))."""

    return 2.0 * (1.0 - dist.sum_of_squares())


def joint_havrda_charvat_entropy(table, beta):
    """H_beta of the joint distribution n_ij / N of a contingency table."""

    return _entropy_of_probs(_joint_probs(table), beta)


def joint_quadratic_entropy(table):
    """H_2 of the joint distribution of a contingency table."""

    return _quadratic_of_probs(_joint_probs(table))


def vi_beta_from_contingency(table, beta):
    """Generalized variation of information 2 H_beta(U, V) - H_beta(U) - H_beta(V)."""

    joint = joint_havrda_charvat_entropy(table, beta)
    rows = _entropy_of_probs(_probs_of_counts(table.row_sums, table.total), beta)
    cols = _entropy_of_probs(_probs_of_counts(table.col_sums, table.total), beta)

    return 2.0 * joint - rows - cols


def vi2_from_contingency(table):
    """Quadratic variation of information of the two partitions of a table."""

    joint = joint_quadratic_entropy(table)
    rows = _quadratic_of_probs(_probs_of_counts(table.row_sums, table.total))
    cols = _quadratic_of_probs(_probs_of_counts(table.col_sums, table.total))

    return 2.0 * joint - rows - cols


def vi2_from_ri(ri, n):
    """Quadratic variation of information from the Rand index: (2 / n) (n - 1) (1 - ri)."""

    if n < 2:
        raise InvalidArgument("At least two objects are required (got {})".format(n))

    if not (0.0 <= ri <= 1.0):
        raise InvalidArgument("Rand index must be in [0, 1] (got {})".format(ri))

    return (2.0 / n) * (n - 1) * (1.0 - ri)


def lemma_vi2(h2_u, h2_v):
    """Quadratic variation of information of two statistically independent partitions."""

    return h2_u + (1.0 - h2_u) * h2_v
