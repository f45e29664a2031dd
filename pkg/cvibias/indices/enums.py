#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Enumeration classes related to validity indices.
"""

from cvibias.utils.enums import EnumListMixin


class IndexId(EnumListMixin):
    """Stable external names of the pair-counting indices, in table order."""

    RI = "RI"
    ARI = "ARI"
    MIRKIN = "Mirkin"
    JI = "JI"
    H = "H"
    W1 = "W1"
    W2 = "W2"
    FM = "FM"
    MK = "MK"
    GAMMA = "Gamma"
    Y = "Y"
    DICE = "Dice"
    K = "K"
    MC = "MC"
    PE = "PE"
    SS1 = "SS1"
    B1 = "B1"
    RR = "RR"
    FMG = "FMG"
    P = "P"
    B2 = "B2"
    SS2 = "SS2"
    SS3 = "SS3"
    GL = "GL"
    RT = "RT"
    GK = "GK"


class ExtraIndexId(EnumListMixin):
    """Indices that are computed from the contingency table instead of the pair counts."""

    VI2 = "VI2"


class Direction(EnumListMixin):
    """Whether the best candidate maximizes or minimizes an index."""

    MAX = "Max"
    MIN = "Min"
