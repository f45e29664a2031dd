"""
Pair-counting external cluster validity indices, analytic
prediction of their number-of-clusters bias and Monte Carlo audits.

.. autosummary::
    :toctree: _cvibias

    cvibias.partition
    cvibias.paircounts
    cvibias.indices
    cvibias.theory
    cvibias.audit
    cvibias.cli
    cvibias.codecs
    cvibias.utils
    cvibias.exceptions
    cvibias.support
"""

import logging

logger_base = logging.getLogger(__name__)
logger_base.addHandler(logging.NullHandler())
