#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Generalized entropies and the analytic predictors of the
number-of-clusters bias of the Rand index family.

.. autosummary::
    :toctree: _theory

    cvibias.theory.enums
    cvibias.theory.entropy
    cvibias.theory.predictors
"""

from cvibias.theory.enums import BiasStatus, VerdictSource
from cvibias.theory.entropy import (havrda_charvat_entropy, joint_havrda_charvat_entropy,
                                    joint_quadratic_entropy, lemma_vi2, quadratic_entropy,
                                    vi2_from_contingency, vi2_from_ri, vi_beta_from_contingency)
from cvibias.theory.predictors import (BiasVerdict, gt1_verdict, gt2_threshold, gt2_verdict,
                                       predict_from_entropy, predict_gt1, predict_gt2,
                                       predict_nc_bias, predict_nc_bias_sorted, skew_distribution)
