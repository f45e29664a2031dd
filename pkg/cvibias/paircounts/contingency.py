#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Class that represents the contingency table of two partitions.
"""

import numpy as np

from cvibias.exceptions import InvalidSize, LengthMismatch, NotDivisible
from cvibias.partition.crisp import ClusterDistribution


class ContingencyTable(object):
    """r x c matrix of overlap counts n_ij between the clusters of
    a row partition U and a column partition V."""

    def __init__(self, counts):
        arr = np.array(counts, dtype=np.int64)

        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise InvalidSize("Contingency table must be a non-empty matrix")

        if np.any(arr < 0):
            raise InvalidSize("Contingency counts must be non-negative")

        arr.setflags(write=False)

        self._counts = arr

    def __eq__(self, other):
        return isinstance(other, ContingencyTable) and np.array_equal(self._counts, other.counts)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "<ContingencyTable {}>".format(self._counts.tolist())

    @property
    def counts(self):
        """Read-only matrix of cell counts."""

        return self._counts

    @property
    def n_rows(self):
        """Number of row clusters r."""

        return int(self._counts.shape[0])

    @property
    def n_cols(self):
        """Number of column clusters c."""

        return int(self._counts.shape[1])

    @property
    def row_sums(self):
        """Row sums a_i as Python integers."""

        return [int(val) for val in self._counts.sum(axis=1)]

    @property
    def col_sums(self):
        """Column sums b_j as Python integers."""

        return [int(val) for val in self._counts.sum(axis=0)]

    @property
    def total(self):
        """Number of objects N."""

        return int(self._counts.sum())

    def transpose(self):
        """Returns the table with the roles of the partitions swapped."""

        return ContingencyTable(self._counts.T)

    def row_distribution(self):
        """Cluster distribution of the row partition."""

        return ClusterDistribution.from_sizes(self.row_sums)

    def col_distribution(self):
        """Cluster distribution of the column partition."""

        return ClusterDistribution.from_sizes(self.col_sums)

    def to_list(self):
        """Returns the counts as nested lists."""

        return self._counts.tolist()


def contingency(u, v):
    """Builds the contingency table with u as rows and v as columns."""

    if len(u) != len(v):
        raise LengthMismatch("Partitions label {} and {} objects".format(len(u), len(v)))

    r, c = u.num_clusters, v.num_clusters
    flat = np.bincount(u.labels * c + v.labels, minlength=r * c)

    return ContingencyTable(flat.reshape(r, c))


def product_contingency(row_sizes, col_sizes):
    """Builds the exactly independent table with cells a_i * b_j / N."""

    row_sizes = [int(val) for val in row_sizes]
    col_sizes = [int(val) for val in col_sizes]
    total = sum(row_sizes)

    if total < 1 or total != sum(col_sizes):
        raise LengthMismatch("Row sizes sum to {} and column sizes to {}".format(total, sum(col_sizes)))

    cells = []

    for a in row_sizes:
        row = []

        for b in col_sizes:
            quot, rem = divmod(a * b, total)

            if rem:
                raise NotDivisible("Cell {} * {} / {} is fractional".format(a, b, total))

            row.append(quot)

        cells.append(row)

    return ContingencyTable(cells)
