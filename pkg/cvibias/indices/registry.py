#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Registry of the 26 pair-counting indices.

Each formula takes the pair counts already converted to floats and is
implemented as printed in the usual comparison table, including three
printings that differ from the classical definitions:

* ``Y`` uses the denominator ``k11*k10 + k01*k00`` (classical Yule's Q
  uses ``k11*k00 + k10*k01``), so it is not symmetric in U and V.
* ``P`` has no square root over its four-factor denominator.
* ``FMG`` subtracts ``1 / (2 * sqrt(k11 + k10))``.
"""

import math

from cvibias.exceptions import UnknownIndex
from cvibias.indices.enums import Direction, ExtraIndexId, IndexId


class ZeroDenominator(ArithmeticError):
    """Raised by a formula when one of its denominators is zero."""


def _div(num, den):
    if den == 0:
        raise ZeroDenominator()

    return num / den


def _sqrt_prod(*factors):
    return math.sqrt(math.prod(factors))


def _rand(k11, k10, k01, k00):
    return _div(k11 + k00, k11 + k10 + k01 + k00)


def _adjusted_rand(k11, k10, k01, k00):
    total = k11 + k10 + k01 + k00
    expected = _div((k11 + k10) * (k11 + k01), total)
    return _div(k11 - expected, ((k11 + k10) + (k11 + k01)) / 2.0 - expected)


def _mirkin(k11, k10, k01, k00):
    return 2.0 * (k10 + k01)


def _jaccard(k11, k10, k01, k00):
    return _div(k11, k11 + k10 + k01)


def _hubert(k11, k10, k01, k00):
    return _div((k11 + k00) - (k10 + k01), k11 + k10 + k01 + k00)


def _wallace_first(k11, k10, k01, k00):
    return _div(k11, k11 + k10)


def _wallace_second(k11, k10, k01, k00):
    return _div(k11, k11 + k01)


def _fowlkes_mallows(k11, k10, k01, k00):
    return _div(k11, _sqrt_prod(k11 + k10, k11 + k01))


def _minkowski(k11, k10, k01, k00):
    return math.sqrt(_div(k10 + k01, k11 + k10))


def _hubert_gamma(k11, k10, k01, k00):
    return _div(k11 * k00 - k10 * k01, _sqrt_prod(k11 + k10, k11 + k01, k01 + k00, k10 + k00))


def _yule(k11, k10, k01, k00):
    return _div(k11 * k00 - k10 * k01, k11 * k10 + k01 * k00)


def _dice(k11, k10, k01, k00):
    return _div(2.0 * k11, 2.0 * k11 + k10 + k01)


def _kulczynski(k11, k10, k01, k00):
    return 0.5 * (_div(k11, k11 + k10) + _div(k11, k11 + k01))


def _mcconnaughey(k11, k10, k01, k00):
    return _div(k11 * k11 - k10 * k01, (k11 + k10) * (k11 + k01))


def _peirce(k11, k10, k01, k00):
    return _div(k11 * k00 - k10 * k01, (k11 + k01) * (k10 + k00))


def _sokal_sneath_first(k11, k10, k01, k00):
    return 0.25 * (
        _div(k11, k11 + k10) + _div(k11, k11 + k01) +
        _div(k00, k10 + k00) + _div(k00, k01 + k00))


def _baulieu_first(k11, k10, k01, k00):
    total = k11 + k10 + k01 + k00
    return _div(total * total - total * (k10 + k01) + (k10 - k01) ** 2, total * total)


def _russel_rao(k11, k10, k01, k00):
    return _div(k11, k11 + k10 + k01 + k00)


def _fager_mcgowan(k11, k10, k01, k00):
    return _div(k11, _sqrt_prod(k11 + k10, k11 + k01)) - _div(1.0, 2.0 * math.sqrt(k11 + k10))


def _pearson(k11, k10, k01, k00):
    return _div(k11 * k00 - k10 * k01, (k11 + k10) * (k11 + k01) * (k01 + k00) * (k10 + k00))


def _baulieu_second(k11, k10, k01, k00):
    total = k11 + k10 + k01 + k00
    return _div(k11 * k00 - k10 * k01, total * total)


def _sokal_sneath_second(k11, k10, k01, k00):
    return _div(k11, k11 + 2.0 * (k10 + k01))


def _sokal_sneath_third(k11, k10, k01, k00):
    return _div(k11 * k00, _sqrt_prod(k11 + k10, k11 + k01, k10 + k00, k01 + k00))


def _gower_legendre(k11, k10, k01, k00):
    return _div(k11 + k00, k11 + 0.5 * (k10 + k01) + k00)


def _rogers_tanimoto(k11, k10, k01, k00):
    return _div(k11 + k00, k11 + 2.0 * (k10 + k01) + k00)


def _goodman_kruskal(k11, k10, k01, k00):
    return _div(k11 * k00 - k10 * k01, k11 * k00 + k10 * k01)


class RangeKind(object):
    """Known value ranges of the indices."""

    UNIT = (0.0, 1.0)
    SIGNED_UNIT = (-1.0, 1.0)
    QUARTER = (-0.25, 0.25)
    VI2 = (0.0, 2.0)


class IndexDescriptor(object):
    """Identity, formula and optimality direction of an index."""

    def __init__(self, index_id, name, direction, table_row, formula, value_range=None, to_rand=None):
        self.id = index_id
        self.name = name
        self.direction = direction
        self.table_row = table_row
        self.formula = formula
        self._value_range = value_range
        self._to_rand = to_rand

    def __repr__(self):
        return "<IndexDescriptor {} ({}, {})>".format(self.id, self.table_row, self.direction)

    @property
    def is_max(self):
        """True if larger values mean more similar partitions."""

        return self.direction == Direction.MAX

    def value_range(self, n_objects=None):
        """Returns the closed (low, high) interval of attainable values,
        or None when the index has no fixed range. Ranges that depend on
        the object count return None if it is not given."""

        if callable(self._value_range):
            return self._value_range(n_objects) if n_objects else None

        return self._value_range

    @property
    def rand_equivalent(self):
        """True if the index is a strictly monotone function of the Rand index."""

        return self._to_rand is not None

    def to_rand(self, value, n_objects):
        """Maps a value of this index back to the Rand index of the same pair counts."""

        if self._to_rand is None:
            raise UnknownIndex("{} is not a transform of the Rand index".format(self.id))

        return self._to_rand(value, n_objects)


def _mirkin_range(n_objects):
    return 0.0, float(n_objects) * (n_objects - 1)


# Inverses onto the Rand index, which is (k11 + k00) over all pairs.

def _rand_from_rand(value, n_objects):
    return value


def _rand_from_mirkin(value, n_objects):
    return 1.0 - value / (float(n_objects) * (n_objects - 1))


def _rand_from_hubert(value, n_objects):
    return (value + 1.0) / 2.0


def _rand_from_gower_legendre(value, n_objects):
    return value / (2.0 - value)


def _rand_from_rogers_tanimoto(value, n_objects):
    return 2.0 * value / (1.0 + value)


_DESCRIPTORS = [
    IndexDescriptor(IndexId.RI, "Rand Index", Direction.MAX, 1, _rand, RangeKind.UNIT, _rand_from_rand),
    IndexDescriptor(IndexId.ARI, "Adjusted Rand Index", Direction.MAX, 2, _adjusted_rand, RangeKind.SIGNED_UNIT),
    IndexDescriptor(IndexId.MIRKIN, "Mirkin Metric", Direction.MIN, 3, _mirkin, _mirkin_range, _rand_from_mirkin),
    IndexDescriptor(IndexId.JI, "Jaccard Index", Direction.MAX, 4, _jaccard, RangeKind.UNIT),
    IndexDescriptor(IndexId.H, "Hubert", Direction.MAX, 5, _hubert, RangeKind.SIGNED_UNIT,
                    _rand_from_hubert),
    IndexDescriptor(IndexId.W1, "Wallace (first)", Direction.MAX, 6, _wallace_first, RangeKind.UNIT),
    IndexDescriptor(IndexId.W2, "Wallace (second)", Direction.MAX, 7, _wallace_second, RangeKind.UNIT),
    IndexDescriptor(IndexId.FM, "Fowlkes and Mallows", Direction.MAX, 8, _fowlkes_mallows, RangeKind.UNIT),
    IndexDescriptor(IndexId.MK, "Minkowski", Direction.MIN, 9, _minkowski),
    IndexDescriptor(IndexId.GAMMA, "Hubert's Gamma", Direction.MAX, 10, _hubert_gamma, RangeKind.SIGNED_UNIT),
    IndexDescriptor(IndexId.Y, "Yule", Direction.MAX, 11, _yule),
    IndexDescriptor(IndexId.DICE, "Dice", Direction.MAX, 12, _dice, RangeKind.UNIT),
    IndexDescriptor(IndexId.K, "Kulczynski", Direction.MAX, 13, _kulczynski, RangeKind.UNIT),
    IndexDescriptor(IndexId.MC, "McConnaughey", Direction.MAX, 14, _mcconnaughey, RangeKind.SIGNED_UNIT),
    IndexDescriptor(IndexId.PE, "Peirce", Direction.MAX, 15, _peirce, RangeKind.SIGNED_UNIT),
    IndexDescriptor(IndexId.SS1, "Sokal and Sneath (first)", Direction.MAX, 16, _sokal_sneath_first, RangeKind.UNIT),
    IndexDescriptor(IndexId.B1, "Baulieu (first)", Direction.MAX, 17, _baulieu_first, RangeKind.UNIT),
    IndexDescriptor(IndexId.RR, "Russel and Rao", Direction.MAX, 18, _russel_rao, RangeKind.UNIT),
    IndexDescriptor(IndexId.FMG, "Fager and McGowan", Direction.MAX, 19, _fager_mcgowan),
    IndexDescriptor(IndexId.P, "Pearson", Direction.MAX, 20, _pearson),
    IndexDescriptor(IndexId.B2, "Baulieu (second)", Direction.MAX, 21, _baulieu_second, RangeKind.QUARTER),
    IndexDescriptor(IndexId.SS2, "Sokal and Sneath (second)", Direction.MAX, 22, _sokal_sneath_second, RangeKind.UNIT),
    IndexDescriptor(IndexId.SS3, "Sokal and Sneath (third)", Direction.MAX, 23, _sokal_sneath_third, RangeKind.UNIT),
    IndexDescriptor(IndexId.GL, "Gower and Legendre", Direction.MAX, 24, _gower_legendre, RangeKind.UNIT,
                    _rand_from_gower_legendre),
    IndexDescriptor(IndexId.RT, "Rogers and Tanimoto", Direction.MAX, 25, _rogers_tanimoto, RangeKind.UNIT,
                    _rand_from_rogers_tanimoto),
    IndexDescriptor(IndexId.GK, "Goodman and Kruskal", Direction.MAX, 26, _goodman_kruskal, RangeKind.SIGNED_UNIT)
]

_REGISTRY = {desc.id: desc for desc in _DESCRIPTORS}


def descriptor(index_id):
    """Returns the descriptor of the given index id."""

    try:
        return _REGISTRY[index_id]
    except KeyError:
        raise UnknownIndex("Unknown index: {}".format(index_id))


def descriptors():
    """Returns all descriptors in table order."""

    return list(_DESCRIPTORS)


def ids():
    """Returns all index ids in table order."""

    return [desc.id for desc in _DESCRIPTORS]


VI2_DESCRIPTOR = IndexDescriptor(
    ExtraIndexId.VI2, "Quadratic variation of information",
    Direction.MIN, None, None, RangeKind.VI2)


def audit_descriptor(index_id):
    """Like :func:`descriptor` but also accepts the ids that are
    evaluated from the contingency table (VI2)."""

    if index_id == ExtraIndexId.VI2:
        return VI2_DESCRIPTOR

    return descriptor(index_id)
