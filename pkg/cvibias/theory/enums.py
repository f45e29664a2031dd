#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Enumeration classes related to bias verdicts.
"""

from cvibias.utils.enums import EnumListMixin


class BiasStatus(EnumListMixin):
    """Preference of an index ordered by the number of clusters of the candidates."""

    NCINC = "NCinc"
    NCDEC = "NCdec"
    NCNEU = "NCneu"


class VerdictSource(EnumListMixin):
    """Where a bias verdict comes from."""

    THEOREM_H2 = "TheoremH2"
    COROLLARY = "Corollary"
    THEOREM_SORTED = "TheoremSorted"
    GT1 = "GT1"
    GT2 = "GT2"
    EMPIRICAL = "Empirical"
