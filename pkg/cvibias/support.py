#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Functions that read the runtime settings that may be overridden from the environment.
"""

import os

ENV_WORKERS = "CVIBIAS_WORKERS"
ENV_FULL_SCALE = "CVIBIAS_FULL_SCALE"
ENV_BRUTEFORCE_CAP = "CVIBIAS_BRUTEFORCE_CAP"

DEFAULT_WORKERS = 1
DEFAULT_BRUTEFORCE_CAP = 2000

DESK_SCALE_N = 10000
FULL_SCALE_N = 100000

DEFAULT_SEED = 2016

_TRUTHY = {"1", "true", "yes", "on"}


def _env_int(name, default, minimum=1):
    """Reads a positive integer from the environment, falling back to the default."""

    raw = os.environ.get(name)

    if raw is None or not raw.strip():
        return default

    try:
        val = int(raw)
    except ValueError:
        raise ValueError("Environment variable {} must be an integer: {}".format(name, raw))

    if val < minimum:
        raise ValueError("Environment variable {} must be >= {}".format(name, minimum))

    return val


def get_default_workers():
    """Returns the number of threads used to run Monte Carlo trials."""

    return _env_int(ENV_WORKERS, DEFAULT_WORKERS)


def get_bruteforce_cap():
    """Returns the largest object count accepted by the brute-force pair counter."""

    return _env_int(ENV_BRUTEFORCE_CAP, DEFAULT_BRUTEFORCE_CAP, minimum=2)


def is_full_scale_enabled():
    """Returns True if scenario presets should use the full object count."""

    return os.environ.get(ENV_FULL_SCALE, "").strip().lower() in _TRUTHY


def default_object_count(full_scale=None):
    """Object count used by the presets that follow the N=100000 protocol."""

    full_scale = is_full_scale_enabled() if full_scale is None else full_scale

    return FULL_SCALE_N if full_scale else DESK_SCALE_N
