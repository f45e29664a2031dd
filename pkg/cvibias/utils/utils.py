#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Small helpers shared by the data type wrappers, codecs and generators.
"""

import json
import math

FLOAT_FORMAT = ".12g"


def merge_args_kwargs_dict(args, kwargs):
    """Takes a tuple of args and dict of kwargs.
    Returns a dict that is the result of merging the first item
    of args (if that item is a dict) and the kwargs dict."""

    init_dict = {}

    if len(args) > 0 and isinstance(args[0], dict):
        init_dict = dict(args[0])

    init_dict.update(kwargs)

    return init_dict


def to_json_obj(obj):
    """Recursive function that attempts to convert
    any given object to a JSON-serializable object."""

    if hasattr(obj, "to_dict"):
        return to_json_obj(obj.to_dict())

    if isinstance(obj, (set, tuple)):
        return [to_json_obj(item) for item in obj]

    if isinstance(obj, list):
        return [to_json_obj(item) for item in obj]

    if isinstance(obj, dict):
        return {key: to_json_obj(val) for key, val in obj.items()}

    try:
        json.dumps(obj)
        return obj
    except TypeError:
        raise ValueError("Object {} is not JSON serializable".format(obj))


def round_half_up(value):
    """Rounds to the nearest integer with ties going up (0.5 -> 1)."""

    return int(math.floor(value + 0.5))


def format_float(value):
    """Formats a float with a fixed number of significant digits."""

    return format(float(value), FLOAT_FORMAT)


def parse_float_list(raw):
    """Parses a comma separated list of floats."""

    try:
        return [float(item) for item in raw.split(",") if item.strip()]
    except ValueError:
        raise ValueError("Invalid list of numbers: {}".format(raw))


def parse_id_list(raw):
    """Parses a comma separated list of identifiers."""

    return [item.strip() for item in raw.split(",") if item.strip()]
