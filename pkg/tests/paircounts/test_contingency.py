#!/usr/bin/env python
# -*- coding: utf-8 -*-

import pytest

from cvibias.exceptions import InvalidSize, LengthMismatch, NotDivisible
from cvibias.paircounts.contingency import ContingencyTable, contingency, product_contingency
from cvibias.partition.crisp import CrispPartition
from tests.utils import random_partition_pair


def test_contingency_examples():
    """Cell counts of small partitions."""

    cross = contingency(CrispPartition([0, 0, 1, 1]), CrispPartition([0, 1, 0, 1]))

    assert cross.to_list() == [[1, 1], [1, 1]]
    assert contingency(CrispPartition([0, 0, 1, 1]), CrispPartition([0, 0, 1, 1])).to_list() == [[2, 0], [0, 2]]
    assert contingency(CrispPartition([0, 0, 0]), CrispPartition([0, 1, 2])).to_list() == [[1, 1, 1]]


def test_contingency_sums(rng):
    """Row and column sums are the cluster sizes."""

    for _ in range(20):
        part_u, part_v = random_partition_pair(rng)
        table = contingency(part_u, part_v)

        assert table.total == len(part_u)
        assert table.row_sums == list(part_u.cluster_sizes)
        assert table.col_sums == list(part_v.cluster_sizes)
        assert table.n_rows == part_u.num_clusters
        assert table.n_cols == part_v.num_clusters


def test_contingency_transpose(rng):
    """Swapping the partitions transposes the table."""

    part_u, part_v = random_partition_pair(rng)

    assert contingency(part_v, part_u) == contingency(part_u, part_v).transpose()


def test_contingency_length_mismatch():
    """Partitions must label the same objects."""

    with pytest.raises(LengthMismatch):
        contingency(CrispPartition([0, 1]), CrispPartition([0, 1, 1]))


def test_contingency_table_validation():
    """Tables are non-empty matrices of non-negative counts."""

    with pytest.raises(InvalidSize):
        ContingencyTable([[1, -1]])

    with pytest.raises(InvalidSize):
        ContingencyTable([1, 2])


def test_product_contingency():
    """Exactly independent tables."""

    assert product_contingency([2, 2], [2, 2]).to_list() == [[1, 1], [1, 1]]
    assert product_contingency([6, 3], [3, 3, 3]).to_list() == [[2, 2, 2], [1, 1, 1]]

    table = product_contingency([6, 3], [3, 3, 3])

    assert table.row_sums == [6, 3]
    assert table.col_sums == [3, 3, 3]
    assert table.row_distribution().probs == pytest.approx((2.0 / 3.0, 1.0 / 3.0))


def test_product_contingency_errors():
    """Fractional cells and unequal totals are rejected."""

    with pytest.raises(NotDivisible):
        product_contingency([3, 2], [2, 3])

    with pytest.raises(LengthMismatch):
        product_contingency([3, 2], [2, 2])
