#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Random partition generators.

Every generator is a pure function of its parameters and an explicit
:class:`numpy.random.Generator`. Generated partitions never contain
empty clusters: empty clusters are filled by moving one random object
out of the currently largest cluster.
"""

import logging

import numpy as np

from cvibias.exceptions import InvalidSize
from cvibias.partition.crisp import CrispPartition
from cvibias.utils.utils import round_half_up

logger = logging.getLogger(__name__)


def derive_stream(master_seed, *keys):
    """Returns an independent random generator for the given master seed and key path.
    The same (master_seed, keys) always yields the same stream."""

    keys = tuple(int(key) for key in keys)
    seq = np.random.SeedSequence(int(master_seed), spawn_key=keys)

    return np.random.default_rng(seq)


def _check_counts(n, c, min_clusters=1):
    if n < 1:
        raise InvalidSize("Object count must be positive (got {})".format(n))

    if c < min_clusters or c > n:
        raise InvalidSize("Cluster count {} outside [{}, {}]".format(c, min_clusters, n))


def _repair_empty(labels, num_clusters, rng, start=0):
    """Fills each empty cluster in [start, num_clusters) with one object
    taken from the currently largest cluster in the same range."""

    counts = np.bincount(labels, minlength=num_clusters)

    for cluster in range(start, num_clusters):
        if counts[cluster] > 0:
            continue

        donor = start + int(np.argmax(counts[start:]))
        members = np.flatnonzero(labels == donor)
        moved = members[rng.integers(members.size)]
        labels[moved] = cluster
        counts[donor] -= 1
        counts[cluster] += 1

        logger.debug("Moved object %s from cluster %s to empty cluster %s", moved, donor, cluster)

    return labels


def gen_uniform_random(n, c, rng):
    """Draws each object's label uniformly from [0, c)."""

    _check_counts(n, c)

    labels = rng.integers(0, c, size=n, dtype=np.int64)
    _repair_empty(labels, c, rng)

    return CrispPartition(labels, num_clusters=c)


def gen_with_sizes(sizes, rng):
    """Assigns a fixed pattern of cluster sizes to a uniformly random permutation of the objects."""

    sizes = [int(size) for size in sizes]

    if not sizes or any(size < 1 for size in sizes):
        raise InvalidSize("Cluster sizes must be positive: {}".format(sizes))

    pattern = np.repeat(np.arange(len(sizes), dtype=np.int64), sizes)

    return CrispPartition(rng.permutation(pattern), num_clusters=len(sizes))


def gen_balanced(n, c, rng):
    """Random partition whose cluster sizes differ by at most one."""

    _check_counts(n, c)

    base, extra = divmod(n, c)
    sizes = [base + 1 if idx < extra else base for idx in range(c)]

    return gen_with_sizes(sizes, rng)


def gen_skewed(n, c, p1, rng):
    """Puts round(p1 * n) random objects in cluster 0 and
    spreads the rest uniformly over clusters [1, c)."""

    _check_counts(n, c, min_clusters=2)

    if not (0.0 < p1 < 1.0):
        raise InvalidSize("Fraction of the first cluster must be in (0, 1) (got {})".format(p1))

    size_first = round_half_up(p1 * n)

    if size_first < 1 or n - size_first < c - 1:
        raise InvalidSize("Cannot place {} objects in cluster 0 and fill {} more clusters with {} objects".format(
            size_first, c - 1, n - size_first))

    perm = rng.permutation(n)
    labels = np.empty(n, dtype=np.int64)
    labels[perm[:size_first]] = 0
    labels[perm[size_first:]] = rng.integers(1, c, size=n - size_first, dtype=np.int64)
    _repair_empty(labels, c, rng, start=1)

    return CrispPartition(labels, num_clusters=c)


def gen_two_stage_skewed(n, c_true, f1, f2, rng):
    """Cluster 0 takes round(f1 * n) random objects, cluster 1 takes
    round(f2 * rest) of the remaining ones, and the others are spread
    uniformly over clusters [2, c_true)."""

    _check_counts(n, c_true, min_clusters=3)

    for frac in (f1, f2):
        if not (0.0 < frac < 1.0):
            raise InvalidSize("Fractions must be in (0, 1) (got {})".format(frac))

    size_first = round_half_up(f1 * n)
    size_second = round_half_up(f2 * (n - size_first))
    size_rest = n - size_first - size_second

    if size_first < 1 or size_second < 1 or size_rest < c_true - 2:
        raise InvalidSize("Sizes ({}, {}, {}) cannot hold {} non-empty clusters".format(
            size_first, size_second, size_rest, c_true))

    perm = rng.permutation(n)
    labels = np.empty(n, dtype=np.int64)
    labels[perm[:size_first]] = 0
    labels[perm[size_first:size_first + size_second]] = 1
    labels[perm[size_first + size_second:]] = rng.integers(2, c_true, size=size_rest, dtype=np.int64)
    _repair_empty(labels, c_true, rng, start=2)

    return CrispPartition(labels, num_clusters=c_true)


def gen_with_pinned_first_cluster(gt, c, rng):
    """Copies cluster 0 of the given partition and draws
    the labels of every other object uniformly from [1, c)."""

    if c < 2:
        raise InvalidSize("At least two clusters are required (got {})".format(c))

    if gt.num_clusters < 2:
        raise InvalidSize("The pinned partition must have at least two clusters")

    outside = len(gt) - gt.cluster_sizes[0]

    if outside < c - 1:
        raise InvalidSize("{} objects outside cluster 0 cannot fill {} clusters".format(outside, c - 1))

    pinned = gt.labels == 0
    labels = np.zeros(len(gt), dtype=np.int64)
    labels[~pinned] = rng.integers(1, c, size=outside, dtype=np.int64)
    _repair_empty(labels, c, rng, start=1)

    return CrispPartition(labels, num_clusters=c)


def sizes_from_ratio(n, ratio):
    """Apportions n objects over an integer ratio with the largest remainder method.
    Ties on the remainder go to the earlier part."""

    ratio = [int(part) for part in ratio]

    if not ratio or any(part < 1 for part in ratio):
        raise InvalidSize("Ratio parts must be positive integers: {}".format(ratio))

    total = sum(ratio)
    quotas = [divmod(n * part, total) for part in ratio]
    sizes = [quota for quota, _ in quotas]
    missing = n - sum(sizes)
    order = sorted(range(len(ratio)), key=lambda idx: (-quotas[idx][1], idx))

    for idx in order[:missing]:
        sizes[idx] += 1

    if any(size < 1 for size in sizes):
        raise InvalidSize("Ratio {} leaves an empty cluster for n={}".format(ratio, n))

    return sizes
