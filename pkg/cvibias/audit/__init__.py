#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Monte Carlo audits of the number-of-clusters bias of the indices.

.. autosummary::
    :toctree: _audit

    cvibias.audit.enums
    cvibias.audit.validation
    cvibias.audit.dictionaries
    cvibias.audit.runner
    cvibias.audit.trend
    cvibias.audit.agreement
    cvibias.audit.scenarios
"""
