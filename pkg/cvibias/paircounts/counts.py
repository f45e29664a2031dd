#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Pair counts of two partitions and the brute-force pair counting oracle.
"""

import math

import numpy as np

from cvibias.exceptions import CapExceeded, LengthMismatch, PairCountOverflow
from cvibias.support import get_bruteforce_cap

MAX_PAIRS = 2 ** 63 - 1


def _pairs(n):
    return n * (n - 1) // 2


class PairCounts(object):
    """The four pair counts of two partitions U (rows) and V (columns):

    * ``k11``: pairs together in both partitions.
    * ``k10``: pairs together in U only.
    * ``k01``: pairs together in V only.
    * ``k00``: pairs apart in both partitions.

    Counts are exact Python integers."""

    __slots__ = ("_k11", "_k10", "_k01", "_k00")

    def __init__(self, k11, k10, k01, k00):
        values = tuple(int(val) for val in (k11, k10, k01, k00))

        if any(val < 0 for val in values):
            raise ValueError("Pair counts must be non-negative: {}".format(values))

        if sum(values) > MAX_PAIRS:
            raise PairCountOverflow()

        self._k11, self._k10, self._k01, self._k00 = values

    def __eq__(self, other):
        return isinstance(other, PairCounts) and self.as_tuple() == other.as_tuple()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        return "<PairCounts k11={} k10={} k01={} k00={}>".format(*self.as_tuple())

    @property
    def k11(self):
        return self._k11

    @property
    def k10(self):
        return self._k10

    @property
    def k01(self):
        return self._k01

    @property
    def k00(self):
        return self._k00

    @property
    def total_pairs(self):
        """C(N, 2)."""

        return self._k11 + self._k10 + self._k01 + self._k00

    @property
    def agreements(self):
        """Pairs on which both partitions agree (k11 + k00)."""

        return self._k11 + self._k00

    @property
    def disagreements(self):
        """Pairs on which the partitions disagree (k10 + k01)."""

        return self._k10 + self._k01

    @property
    def n_objects(self):
        """Number of objects N recovered from C(N, 2)."""

        return (1 + math.isqrt(1 + 8 * self.total_pairs)) // 2

    def swapped(self):
        """Pair counts of the comparison with the partitions swapped."""

        return PairCounts(self._k11, self._k01, self._k10, self._k00)

    def as_tuple(self):
        """Returns (k11, k10, k01, k00)."""

        return self._k11, self._k10, self._k01, self._k00

    def to_dict(self):
        """Returns the counts as a dict."""

        return dict(zip(("k11", "k10", "k01", "k00"), self.as_tuple()))


def pair_counts(table):
    """Derives the pair counts from a contingency table."""

    total_pairs = _pairs(table.total)

    if total_pairs > MAX_PAIRS:
        raise PairCountOverflow("C({}, 2) exceeds 63 bits".format(table.total))

    k11 = sum(_pairs(int(val)) for val in table.counts.ravel() if val > 1)
    k10 = sum(_pairs(val) for val in table.row_sums) - k11
    k01 = sum(_pairs(val) for val in table.col_sums) - k11
    k00 = total_pairs - k11 - k10 - k01

    return PairCounts(k11, k10, k01, k00)


def pair_counts_bruteforce(u, v, cap=None):
    """Classifies every object pair directly. Testing oracle for :func:`pair_counts`."""

    if len(u) != len(v):
        raise LengthMismatch("Partitions label {} and {} objects".format(len(u), len(v)))

    cap = get_bruteforce_cap() if cap is None else cap

    if len(u) > cap:
        raise CapExceeded("{} objects exceed the brute-force cap of {}".format(len(u), cap))

    idx_a, idx_b = np.triu_indices(len(u), k=1)
    same_u = u.labels[idx_a] == u.labels[idx_b]
    same_v = v.labels[idx_a] == v.labels[idx_b]

    return PairCounts(
        int(np.count_nonzero(same_u & same_v)),
        int(np.count_nonzero(same_u & ~same_v)),
        int(np.count_nonzero(~same_u & same_v)),
        int(np.count_nonzero(~same_u & ~same_v)))
