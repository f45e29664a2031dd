#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Contingency tables and pair counts of two partitions.

.. autosummary::
    :toctree: _paircounts

    cvibias.paircounts.contingency
    cvibias.paircounts.counts
"""

from cvibias.paircounts.contingency import ContingencyTable, contingency, product_contingency
from cvibias.paircounts.counts import PairCounts, pair_counts, pair_counts_bruteforce
