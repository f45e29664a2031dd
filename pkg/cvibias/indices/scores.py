#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Evaluation of indices on pair counts.
"""

import math

from cvibias.indices.registry import ZeroDenominator, descriptor, descriptors


class Degenerate(object):
    """Marker for an index value that is undefined because a denominator is zero."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(Degenerate, cls).__new__(cls)

        return cls._instance

    def __repr__(self):
        return "DEGENERATE"

    def __str__(self):
        return "degenerate"

    def __bool__(self):
        return False


DEGENERATE = Degenerate()


class IndexScore(object):
    """Value of one index for one pair of partitions."""

    __slots__ = ("id", "value")

    def __init__(self, index_id, value):
        self.id = index_id
        self.value = value

    def __eq__(self, other):
        return isinstance(other, IndexScore) and \
            self.id == other.id and self.value == other.value

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "<IndexScore {}={!r}>".format(self.id, self.value)

    @property
    def is_degenerate(self):
        """True if the value is the :data:`DEGENERATE` marker."""

        return self.value is DEGENERATE


def _evaluate_descriptor(desc, floats):
    try:
        value = desc.formula(*floats)
    except ZeroDenominator:
        return IndexScore(desc.id, DEGENERATE)

    if not math.isfinite(value):
        return IndexScore(desc.id, DEGENERATE)

    return IndexScore(desc.id, value)


def evaluate(index_id, counts):
    """Evaluates one index on the given pair counts.
    Counts are converted to floats before any product is taken."""

    return _evaluate_descriptor(descriptor(index_id), [float(val) for val in counts.as_tuple()])


def evaluate_all(counts):
    """Evaluates every index; returns a dict keyed by index id in table order."""

    floats = [float(val) for val in counts.as_tuple()]

    return {desc.id: _evaluate_descriptor(desc, floats) for desc in descriptors()}
