#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Crisp partitions, cluster size distributions and the random
partition generators used by the bias experiments.

.. autosummary::
    :toctree: _partition

    cvibias.partition.crisp
    cvibias.partition.generators
    cvibias.partition.io
"""

from cvibias.partition.crisp import (ClusterDistribution, CrispPartition,
                                     cluster_distribution, from_labels)
from cvibias.partition.generators import (derive_stream, gen_balanced,
                                          gen_skewed, gen_two_stage_skewed,
                                          gen_uniform_random,
                                          gen_with_pinned_first_cluster,
                                          gen_with_sizes, sizes_from_ratio)
from cvibias.partition.io import read_label_file, write_label_file
