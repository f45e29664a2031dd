#!/usr/bin/env python
# -*- coding: utf-8 -*-

import math

import pytest

from cvibias.exceptions import InvalidArgument, InvalidBeta
from cvibias.indices.enums import IndexId
from cvibias.indices.scores import evaluate
from cvibias.paircounts.contingency import ContingencyTable, product_contingency
from cvibias.paircounts.counts import pair_counts
from cvibias.partition.crisp import ClusterDistribution
from cvibias.theory.entropy import (havrda_charvat_entropy, joint_havrda_charvat_entropy, joint_quadratic_entropy,
                                    lemma_vi2, quadratic_entropy, vi2_from_contingency, vi2_from_ri,
                                    vi_beta_from_contingency)


def _random_product_table(rng):
    row_parts = rng.integers(1, 6, size=int(rng.integers(1, 6))).tolist()
    col_parts = rng.integers(1, 6, size=int(rng.integers(1, 6))).tolist()
    rows = [part * sum(col_parts) for part in row_parts]
    cols = [part * sum(row_parts) for part in col_parts]
    return product_contingency(rows, cols)


def test_havrda_charvat_examples():
    """Generalized entropy of simple distributions."""

    fair = ClusterDistribution([0.5, 0.5])

    assert havrda_charvat_entropy(fair, 2) == pytest.approx(1.0)
    assert havrda_charvat_entropy(fair, 1) == pytest.approx(1.0)
    assert havrda_charvat_entropy(fair, 3) == pytest.approx(1.0)

    for beta in (0.5, 1, 2, 3):
        assert havrda_charvat_entropy(ClusterDistribution([1.0]), beta) == 0.0


def test_havrda_charvat_shannon_limit():
    """Order 1 is the limit of the family."""

    dist = ClusterDistribution([0.7, 0.2, 0.1])
    shannon = -sum(p * math.log2(p) for p in dist)

    assert havrda_charvat_entropy(dist, 1) == pytest.approx(shannon)
    assert havrda_charvat_entropy(dist, 1 + 1e-7) == pytest.approx(shannon, rel=1e-5)


def test_havrda_charvat_invalid_beta():
    """The order must be positive."""

    with pytest.raises(InvalidBeta):
        havrda_charvat_entropy(ClusterDistribution([1.0]), 0)

    with pytest.raises(InvalidBeta):
        joint_havrda_charvat_entropy(ContingencyTable([[1]]), -1)


def test_quadratic_entropy():
    """Quadratic entropy is the order 2 generalized entropy."""

    assert quadratic_entropy(ClusterDistribution.balanced(2)) == pytest.approx(1.0)
    assert quadratic_entropy(ClusterDistribution.balanced(5)) == pytest.approx(1.6)
    assert quadratic_entropy(ClusterDistribution([0.8, 0.05, 0.05, 0.05, 0.05])) == pytest.approx(0.7)

    dist = ClusterDistribution([0.6, 0.3, 0.1])

    assert quadratic_entropy(dist) == pytest.approx(havrda_charvat_entropy(dist, 2))


def test_joint_quadratic_entropy():
    """Quadratic entropy of the joint distribution."""

    assert joint_quadratic_entropy(ContingencyTable([[1, 1], [1, 1]])) == pytest.approx(1.5)
    assert joint_quadratic_entropy(ContingencyTable([[2, 0], [0, 2]])) == pytest.approx(1.0)
    assert joint_quadratic_entropy(ContingencyTable([[3]])) == 0.0

    table = ContingencyTable([[4, 1], [2, 7]])

    assert joint_quadratic_entropy(table) == pytest.approx(joint_havrda_charvat_entropy(table, 2))


def test_vi2_from_contingency():
    """Quadratic variation of information of small tables."""

    assert vi2_from_contingency(ContingencyTable([[1, 1], [1, 1]])) == pytest.approx(1.0)
    assert vi2_from_contingency(ContingencyTable([[2, 0], [0, 2]])) == pytest.approx(0.0, abs=1e-15)

    table = ContingencyTable([[5, 1, 0], [2, 2, 9]])

    assert vi2_from_contingency(table) == pytest.approx(vi_beta_from_contingency(table, 2))


def test_vi2_from_ri():
    """Quadratic variation of information from the Rand index."""

    assert vi2_from_ri(1.0, 10) == 0.0
    assert vi2_from_ri(1.0 / 3.0, 4) == pytest.approx(1.0)
    assert vi2_from_ri(0.0, 10 ** 9) == pytest.approx(2.0)

    ri = evaluate(IndexId.RI, pair_counts(ContingencyTable([[1, 1], [1, 1]]))).value

    assert vi2_from_ri(ri, 4) == pytest.approx(vi2_from_contingency(ContingencyTable([[1, 1], [1, 1]])))

    with pytest.raises(InvalidArgument):
        vi2_from_ri(0.5, 1)

    with pytest.raises(InvalidArgument):
        vi2_from_ri(1.5, 10)


def test_lemma_independent_partitions(rng):
    """For independent partitions the variation of information follows from the marginals."""

    for _ in range(100):
        table = _random_product_table(rng)
        h2_u = quadratic_entropy(table.row_distribution())
        h2_v = quadratic_entropy(table.col_distribution())

        assert abs(vi2_from_contingency(table) - lemma_vi2(h2_u, h2_v)) < 1e-12


@pytest.mark.parametrize("beta", [0.5, 2, 3])
def test_independence_identity(rng, beta):
    """Generalized entropy of an independent joint distribution."""

    factor = 1.0 - 2.0 ** (1.0 - beta)

    for _ in range(100):
        table = _random_product_table(rng)
        h_u = havrda_charvat_entropy(table.row_distribution(), beta)
        h_v = havrda_charvat_entropy(table.col_distribution(), beta)
        expected = h_u + h_v - factor * h_u * h_v

        assert abs(joint_havrda_charvat_entropy(table, beta) - expected) < 1e-10
