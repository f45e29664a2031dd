#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Classes to serialize and deserialize label files, CSV tables and run manifests.

.. autosummary::
    :toctree: _codecs

    cvibias.codecs.base
    cvibias.codecs.csv_codec
    cvibias.codecs.json_codec
    cvibias.codecs.text
"""
