#!/usr/bin/env python
# -*- coding: utf-8 -*-

import math
import os

import numpy as np

from cvibias.partition.crisp import CrispPartition

DEFAULT_SEED = 20160
ENV_TESTS_SEED = "CVIBIAS_TESTS_SEED"


def tests_seed():
    """Seed used by the randomized tests (may be overridden from the environment)."""

    return int(os.getenv(ENV_TESTS_SEED, DEFAULT_SEED))


def assert_equal_dict(dict_a, dict_b):
    """Asserts that both dicts are equal."""

    assert set(dict_a.keys()) == set(dict_b.keys())

    for key in dict_a:
        assert dict_a[key] == dict_b[key]


def assert_rel_close(actual, expected, rel=1e-9, abs_tol=1e-12):
    """Asserts that two reals agree to a relative tolerance."""

    assert math.isclose(actual, expected, rel_tol=rel, abs_tol=abs_tol), \
        "{!r} != {!r} (rel {})".format(actual, expected, rel)


def random_partition(rng, n, max_clusters):
    """Random partition of n objects whose clusters are relabeled densely."""

    raw = rng.integers(0, max_clusters, size=n)
    _, dense = np.unique(raw, return_inverse=True)

    return CrispPartition(dense.reshape(-1))


def random_partition_pair(rng, max_n=500, max_clusters=10):
    """Two random partitions of the same random number of objects."""

    n = int(rng.integers(2, max_n + 1))

    return (
        random_partition(rng, n, int(rng.integers(1, max_clusters + 1))),
        random_partition(rng, n, int(rng.integers(1, max_clusters + 1))))


def write_text(path, lines):
    """Writes one line per item."""

    with open(path, "w") as fh:
        fh.write("".join("{}\n".format(line) for line in lines))
