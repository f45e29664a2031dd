#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Enumeration classes related to experiment configuration.
"""

from cvibias.utils.enums import EnumListMixin


class GroundTruthKind(EnumListMixin):
    """Ground truth generation protocols."""

    UNIFORM = "uniform"
    RANDOM = "random"
    SKEWED = "skewed"
    TWO_STAGE = "two_stage"
    RATIO = "ratio"


class CandidateKind(EnumListMixin):
    """Candidate partition generation protocols."""

    UNIFORM_RANDOM = "uniform_random"
    BALANCED = "balanced"
    PINNED_FIRST_CLUSTER = "pinned_first_cluster"
    COPY = "copy"


class Orientation(EnumListMixin):
    """Which partition gives the rows of the contingency table."""

    CANDIDATE_FIRST = "candidate_first"
    GT_FIRST = "gt_first"


class TrendScale(EnumListMixin):
    """Denominator of the relative range of a trend curve."""

    BOUNDS = "bounds"
    MAGNITUDE = "magnitude"
