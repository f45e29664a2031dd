#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Monte Carlo experiment runner and the trend curves it produces.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from cvibias.audit.dictionaries import ExperimentConfig
from cvibias.audit.enums import Orientation
from cvibias.indices.enums import ExtraIndexId
from cvibias.indices.registry import audit_descriptor
from cvibias.indices.scores import DEGENERATE, evaluate_all
from cvibias.paircounts.contingency import contingency
from cvibias.paircounts.counts import pair_counts
from cvibias.partition.crisp import cluster_distribution
from cvibias.partition.generators import derive_stream
from cvibias.support import get_default_workers
from cvibias.theory.entropy import vi2_from_contingency

GT_STREAM_KEY = 0
TRIAL_STREAM_KEY = 1


class TrendPoint(object):
    """Aggregated index values of all trials with c candidate clusters.
    The mean is None when every trial was degenerate."""

    __slots__ = ("c", "mean", "stderr", "degenerate")

    def __init__(self, c, mean, stderr, degenerate):
        self.c = c
        self.mean = mean
        self.stderr = stderr
        self.degenerate = degenerate

    def __repr__(self):
        return "<TrendPoint c={} mean={} stderr={} degenerate={}>".format(
            self.c, self.mean, self.stderr, self.degenerate)

    @property
    def is_defined(self):
        """True if at least one trial gave a value."""

        return self.mean is not None


class TrendCurve(object):
    """Mean value of one index as a function of the candidate cluster count.
    Indices that are monotone transforms of the Rand index also carry
    their per-trial values mapped back onto the Rand index (rand_points)."""

    def __init__(self, index_id, points, trials_per_c, fingerprint,
                 direction, n_objects, label, value_range=None, rand_points=None):
        self.index_id = index_id
        self.points = sorted(points, key=lambda point: point.c)
        self.trials_per_c = trials_per_c
        self.fingerprint = fingerprint
        self.direction = direction
        self.n_objects = n_objects
        self.label = label
        self.value_range = value_range
        self.rand_points = sorted(rand_points, key=lambda point: point.c) if rand_points else None

    def __repr__(self):
        return "<TrendCurve {} ({}) {} points>".format(self.index_id, self.label, len(self.points))

    @property
    def c_values(self):
        return [point.c for point in self.points]

    @property
    def means(self):
        return [point.mean for point in self.points]

    @property
    def total_degenerate(self):
        return sum(point.degenerate for point in self.points)

    def defined_points(self):
        """Points with a defined mean."""

        return [point for point in self.points if point.is_defined]


def aggregate(c, values):
    """Builds the point for one cluster count from the per-trial values,
    skipping (and counting) degenerate ones."""

    finite = np.array([val for val in values if val is not DEGENERATE], dtype=float)
    degenerate = len(values) - finite.size

    if finite.size == 0:
        return TrendPoint(c, None, None, degenerate)

    mean = float(np.mean(finite))
    stderr = float(np.std(finite, ddof=1) / math.sqrt(finite.size)) if finite.size > 1 else 0.0

    return TrendPoint(c, mean, stderr, degenerate)


def _to_rand(desc, value, n_objects):
    if value is DEGENERATE:
        return DEGENERATE

    return desc.to_rand(value, n_objects)


class ExperimentRunner(object):
    """Runs the trials of one experiment configuration.
    Every trial draws from its own stream keyed by (c, trial), so results
    do not depend on the number of worker threads."""

    def __init__(self, config, workers=None):
        self._config = config if isinstance(config, ExperimentConfig) else ExperimentConfig(config)
        self._workers = get_default_workers() if workers is None else max(1, int(workers))
        self._ground_truth = None
        self._logr = logging.getLogger(__name__)

    def _log(self, level, msg, **kwargs):
        """Helper function to wrap all log messages."""

        self._logr.log(level, "{} - {}".format(self._config.label, msg), **kwargs)

    @property
    def config(self):
        """The experiment configuration."""

        return self._config

    @property
    def ground_truth(self):
        """The fixed ground truth partition (generated on first access)."""

        if self._ground_truth is None:
            rng = derive_stream(self._config.master_seed, GT_STREAM_KEY)
            self._ground_truth = self._config.gt_spec.generate(self._config.n, rng)
            self._log(logging.DEBUG, "Ground truth sizes: {}".format(list(self._ground_truth.cluster_sizes)))

        return self._ground_truth

    def ground_truth_distribution(self):
        """Realized cluster distribution of the ground truth."""

        return cluster_distribution(self.ground_truth)

    def _tabulate(self, candidate, gt):
        if self._config.orientation == Orientation.GT_FIRST:
            return contingency(gt, candidate)

        return contingency(candidate, gt)

    def run_trial(self, c, trial):
        """Evaluates the requested indices on one random candidate."""

        gt = self.ground_truth
        rng = derive_stream(self._config.master_seed, TRIAL_STREAM_KEY, c, trial)
        candidate = self._config.candidate_spec.generate(gt, c, rng)
        table = self._tabulate(candidate, gt)
        scores = evaluate_all(pair_counts(table))
        values = {}

        for index_id in self._config.indices:
            if index_id == ExtraIndexId.VI2:
                values[index_id] = vi2_from_contingency(table)
            else:
                values[index_id] = scores[index_id].value

        return values

    def run(self):
        """Runs every trial and returns one trend curve per requested index."""

        cfg = self._config
        tasks = [(c, trial) for c in cfg.c_grid for trial in range(cfg.trials_per_c)]

        self._log(logging.INFO, "Running {} trials on {} with {} worker(s)".format(
            len(tasks), cfg.gt_spec.describe(), self._workers))

        gt = self.ground_truth

        if self._workers > 1:
            with ThreadPoolExecutor(max_workers=self._workers) as executor:
                results = list(executor.map(lambda task: self.run_trial(*task), tasks))
        else:
            results = [self.run_trial(*task) for task in tasks]

        fingerprint = cfg.fingerprint()
        by_c = {}

        for (c, _), res in zip(tasks, results):
            by_c.setdefault(c, []).append(res)

        curves = []

        for index_id in cfg.indices:
            desc = audit_descriptor(index_id)
            points = [aggregate(c, [res[index_id] for res in by_c[c]]) for c in cfg.c_grid]
            rand_points = None

            if desc.rand_equivalent:
                rand_points = [
                    aggregate(c, [_to_rand(desc, res[index_id], len(gt)) for res in by_c[c]])
                    for c in cfg.c_grid
                ]

            curve = TrendCurve(
                index_id=index_id,
                points=points,
                trials_per_c=cfg.trials_per_c,
                fingerprint=fingerprint,
                direction=desc.direction,
                n_objects=len(gt),
                label=cfg.label,
                value_range=desc.value_range(len(gt)),
                rand_points=rand_points)

            if curve.total_degenerate:
                self._log(logging.WARNING, "{}: {} degenerate scores skipped".format(
                    index_id, curve.total_degenerate))

            curves.append(curve)

        self._log(logging.INFO, "Finished {} curves".format(len(curves)))

        return curves


def run_experiment(config, workers=None):
    """Runs an experiment and returns its trend curves, one per requested index."""

    return ExperimentRunner(config, workers=workers).run()
