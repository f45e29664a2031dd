#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Pair-counting external cluster validity indices.

.. autosummary::
    :toctree: _indices

    cvibias.indices.enums
    cvibias.indices.registry
    cvibias.indices.scores
"""

from cvibias.indices.enums import Direction, ExtraIndexId, IndexId
from cvibias.indices.registry import IndexDescriptor, audit_descriptor, descriptor, descriptors, ids
from cvibias.indices.scores import DEGENERATE, IndexScore, evaluate, evaluate_all
