#!/usr/bin/env python
# -*- coding: utf-8 -*-

import numpy as np
import pytest

from tests.utils import tests_seed


@pytest.fixture
def rng():
    """Seeded random generator, fresh for every test."""

    return np.random.default_rng(tests_seed())
