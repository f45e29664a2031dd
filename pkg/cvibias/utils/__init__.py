#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Utility functions and classes.

.. autosummary::
    :toctree: _utils

    cvibias.utils.enums
    cvibias.utils.utils
"""
