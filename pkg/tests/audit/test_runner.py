#!/usr/bin/env python
# -*- coding: utf-8 -*-

import logging

import pytest

from cvibias.audit.dictionaries import ExperimentConfig
from cvibias.audit.enums import CandidateKind, GroundTruthKind, Orientation
from cvibias.audit.runner import ExperimentRunner, aggregate, run_experiment
from cvibias.indices.enums import Direction, ExtraIndexId, IndexId
from cvibias.indices.scores import DEGENERATE
from cvibias.theory.entropy import vi2_from_ri


def _config(**kwargs):
    doc = {
        "n": 500,
        "gt_spec": {"kind": GroundTruthKind.UNIFORM, "r": 3},
        "candidate_spec": {"kind": CandidateKind.UNIFORM_RANDOM},
        "c_grid": [2, 3, 4, 5],
        "trials_per_c": 5,
        "master_seed": 42
    }

    doc.update(kwargs)

    return ExperimentConfig(doc)


def test_aggregate():
    """Means and standard errors skip degenerate values."""

    point = aggregate(2, [1.0, 3.0, DEGENERATE])

    assert point.c == 2
    assert point.mean == pytest.approx(2.0)
    assert point.stderr == pytest.approx(1.0)
    assert point.degenerate == 1
    assert point.is_defined

    single = aggregate(3, [0.5])

    assert single.mean == 0.5
    assert single.stderr == 0.0

    empty = aggregate(4, [DEGENERATE, DEGENERATE])

    assert empty.mean is None
    assert empty.stderr is None
    assert empty.degenerate == 2
    assert not empty.is_defined


def test_run_curves():
    """One curve per requested index with one point per cluster count."""

    cfg = _config(indices=[IndexId.RI, IndexId.MIRKIN])
    curves = run_experiment(cfg, workers=1)

    assert [curve.index_id for curve in curves] == [IndexId.RI, IndexId.MIRKIN]

    for curve in curves:
        assert curve.c_values == [2, 3, 4, 5]
        assert curve.trials_per_c == 5
        assert curve.n_objects == 500
        assert curve.label == cfg.label
        assert curve.fingerprint == cfg.fingerprint()
        assert curve.total_degenerate == 0

    assert curves[0].direction == Direction.MAX
    assert curves[1].direction == Direction.MIN
    assert curves[1].value_range == (0, 500 * 499)


def test_run_is_reproducible():
    """Results depend on the seed only, not on the number of workers."""

    cfg = _config(indices=[IndexId.RI, IndexId.ARI, IndexId.JI])

    serial = run_experiment(cfg, workers=1)
    threaded = run_experiment(cfg, workers=4)
    again = run_experiment(cfg, workers=1)

    assert [curve.means for curve in serial] == [curve.means for curve in threaded]
    assert [curve.means for curve in serial] == [curve.means for curve in again]

    reseeded = run_experiment(cfg.replace(master_seed=43), workers=1)

    assert [curve.means for curve in serial] != [curve.means for curve in reseeded]


def test_ground_truth_is_fixed():
    """Every trial of an experiment sees the same ground truth."""

    runner = ExperimentRunner(_config(), workers=1)

    assert runner.ground_truth is runner.ground_truth
    assert runner.ground_truth == ExperimentRunner(_config(), workers=2).ground_truth
    assert runner.ground_truth_distribution().r == 3


def test_trial_streams():
    """A trial's candidate depends on (c, trial) only."""

    runner = ExperimentRunner(_config(indices=[IndexId.RI]), workers=1)

    assert runner.run_trial(3, 1) == runner.run_trial(3, 1)
    assert runner.run_trial(3, 1) != runner.run_trial(3, 2)


def test_copy_candidate():
    """Comparing the ground truth with itself gives perfect scores."""

    cfg = _config(candidate_spec={"kind": CandidateKind.COPY}, indices=[IndexId.RI, IndexId.JI, ExtraIndexId.VI2])

    for curve in run_experiment(cfg, workers=1):
        expected = 0.0 if curve.index_id == ExtraIndexId.VI2 else 1.0

        assert curve.means == pytest.approx([expected] * 4)
        assert all(point.stderr == pytest.approx(0.0) for point in curve.points)


def test_orientation_swaps_wallace():
    """Swapping the table orientation swaps the two Wallace indices."""

    indices = [IndexId.W1, IndexId.W2]
    candidate_first = ExperimentRunner(_config(indices=indices), workers=1)
    gt_first = ExperimentRunner(_config(indices=indices, orientation=Orientation.GT_FIRST), workers=1)

    res_a = candidate_first.run_trial(4, 0)
    res_b = gt_first.run_trial(4, 0)

    assert res_a[IndexId.W1] == pytest.approx(res_b[IndexId.W2])
    assert res_a[IndexId.W2] == pytest.approx(res_b[IndexId.W1])


def test_vi2_matches_rand_index():
    """VI2 evaluated from the table agrees with the value derived from RI."""

    runner = ExperimentRunner(_config(indices=[IndexId.RI, ExtraIndexId.VI2]), workers=1)

    for c in (2, 5):
        res = runner.run_trial(c, 0)

        assert res[ExtraIndexId.VI2] == pytest.approx(vi2_from_ri(res[IndexId.RI], 500), rel=1e-9)


def test_stderr_shrinks_with_trials():
    """More trials give smaller standard errors."""

    few = run_experiment(_config(indices=[IndexId.RI], trials_per_c=10), workers=1)[0]
    many = run_experiment(_config(indices=[IndexId.RI], trials_per_c=160), workers=1)[0]

    for point_few, point_many in zip(few.points, many.points):
        assert point_many.stderr < point_few.stderr


def test_degenerate_scores_are_counted(caplog):
    """Undefined scores are skipped, counted and logged."""

    cfg = _config(
        gt_spec={"kind": GroundTruthKind.UNIFORM, "r": 1},
        candidate_spec={"kind": CandidateKind.COPY},
        c_grid=[1],
        indices=[IndexId.RI, IndexId.ARI])

    with caplog.at_level(logging.WARNING, logger="cvibias.audit.runner"):
        ri, ari = run_experiment(cfg, workers=1)

    assert ri.means == [1.0]
    assert ri.total_degenerate == 0
    assert ari.means == [None]
    assert ari.total_degenerate == 5
    assert not ari.defined_points()
    assert any("degenerate" in record.getMessage() for record in caplog.records)
