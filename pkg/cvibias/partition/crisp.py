#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Classes that represent crisp partitions and their cluster size distributions.
"""

import math

import numpy as np

from cvibias.exceptions import EmptyInput, InvalidDistribution, InvalidSize

DISTRIBUTION_TOLERANCE = 1e-12


class CrispPartition(object):
    """A hard assignment of N objects to c non-empty clusters.
    Cluster ids are dense integers in [0, c); cluster 0 is the first cluster."""

    def __init__(self, labels, num_clusters=None):
        arr = np.asarray(labels)

        if arr.ndim != 1:
            raise InvalidSize("Labels must be a flat sequence")

        if arr.size == 0:
            raise EmptyInput()

        if not np.issubdtype(arr.dtype, np.integer):
            raise InvalidSize("Labels must be integer cluster ids (use from_labels for tokens)")

        arr = arr.astype(np.int64, copy=True)

        if arr.min() < 0:
            raise InvalidSize("Negative cluster id")

        num_clusters = int(arr.max()) + 1 if num_clusters is None else int(num_clusters)

        if arr.max() >= num_clusters:
            raise InvalidSize("Cluster id {} outside [0, {})".format(int(arr.max()), num_clusters))

        sizes = np.bincount(arr, minlength=num_clusters)

        if np.any(sizes == 0):
            empty = np.flatnonzero(sizes == 0).tolist()
            raise InvalidSize("Empty clusters: {}".format(empty))

        arr.setflags(write=False)

        self._labels = arr
        self._num_clusters = num_clusters
        self._cluster_sizes = tuple(int(val) for val in sizes)

    def __len__(self):
        return int(self._labels.size)

    def __eq__(self, other):
        return isinstance(other, CrispPartition) and \
            self._num_clusters == other.num_clusters and \
            np.array_equal(self._labels, other.labels)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "<CrispPartition N={} c={} sizes={}>".format(
            len(self), self._num_clusters, list(self._cluster_sizes))

    @property
    def labels(self):
        """Read-only array of cluster ids, one per object."""

        return self._labels

    @property
    def num_clusters(self):
        """Number of clusters c."""

        return self._num_clusters

    @property
    def cluster_sizes(self):
        """Tuple with the size of each cluster."""

        return self._cluster_sizes

    @property
    def n_objects(self):
        """Number of objects N."""

        return len(self)

    def members(self, cluster):
        """Returns the sorted object indices of the given cluster."""

        return np.flatnonzero(self._labels == cluster)

    def to_list(self):
        """Returns the labels as a list of Python integers."""

        return self._labels.tolist()


class ClusterDistribution(object):
    """Relative cluster sizes p_1..p_r of a partition.
    All entries are positive and sum to 1 within DISTRIBUTION_TOLERANCE."""

    def __init__(self, probs):
        probs = tuple(float(val) for val in probs)

        if not probs:
            raise InvalidDistribution("Empty distribution")

        if any(not (0.0 < val <= 1.0) for val in probs):
            raise InvalidDistribution("Probabilities must be in (0, 1]: {}".format(list(probs)))

        total = math.fsum(probs)

        if abs(total - 1.0) > DISTRIBUTION_TOLERANCE:
            raise InvalidDistribution("Probabilities sum to {!r}, not 1".format(total))

        self._probs = probs

    @classmethod
    def from_sizes(cls, sizes):
        """Builds the distribution of the given positive cluster sizes."""

        sizes = [int(val) for val in sizes]

        if not sizes or any(val <= 0 for val in sizes):
            raise InvalidDistribution("Cluster sizes must be positive: {}".format(sizes))

        total = float(sum(sizes))

        return cls([val / total for val in sizes])

    @classmethod
    def balanced(cls, r):
        """Distribution of r equally sized clusters."""

        if r < 1:
            raise InvalidDistribution("At least one cluster is required")

        return cls([1.0 / r] * r)

    def __len__(self):
        return len(self._probs)

    def __iter__(self):
        return iter(self._probs)

    def __repr__(self):
        return "<ClusterDistribution {}>".format(list(self._probs))

    @property
    def probs(self):
        """Tuple of cluster probabilities."""

        return self._probs

    @property
    def r(self):
        """Number of clusters."""

        return len(self._probs)

    def sorted(self):
        """Returns the same distribution sorted into descending order (p')."""

        return ClusterDistribution(sorted(self._probs, reverse=True))

    def sum_of_squares(self):
        """Returns the sum of the squared probabilities."""

        return math.fsum(val * val for val in self._probs)

    def to_list(self):
        """Returns the probabilities as a list."""

        return list(self._probs)


def from_labels(raw):
    """Builds a partition from arbitrary label tokens.
    Tokens are relabeled densely in order of first appearance."""

    raw = list(raw)

    if not raw:
        raise EmptyInput()

    mapping = {}
    labels = [mapping.setdefault(token, len(mapping)) for token in raw]

    return CrispPartition(np.asarray(labels, dtype=np.int64), num_clusters=len(mapping))


def cluster_distribution(partition):
    """Returns the relative cluster sizes of the given partition."""

    return ClusterDistribution.from_sizes(partition.cluster_sizes)
