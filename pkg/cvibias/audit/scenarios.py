#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Preset experiment suites.

Presets that follow the N=100000 protocol use the desk scale object
count unless full scale is requested (argument or environment).
"""

from cvibias.audit.dictionaries import DEFAULT_TRIALS_PER_C, ExperimentConfig
from cvibias.audit.enums import CandidateKind, GroundTruthKind
from cvibias.exceptions import UnknownScenario
from cvibias.support import DEFAULT_SEED, default_object_count

GT1_CLUSTER_COUNTS = [2, 10, 20, 30, 50]
SKEW_GRID = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]
DEMO_OBJECT_COUNT = 1000
H2_RATIO_DEMO_RATIOS = [(1, 1, 1), (2, 1, 1), (4, 1, 1), (7, 2, 1), (8, 1, 1)]
PREDICTOR_GRID_UNIFORM = [2, 3, 5, 10]


class Scenario(object):
    """Named list of experiment configs and the pairs of config labels
    whose trend curves are compared for ground truth bias."""

    def __init__(self, name, configs, comparisons=None):
        self.name = name
        self.configs = list(configs)
        self.comparisons = list(comparisons or [])

        labels = [cfg.label for cfg in self.configs]

        if len(set(labels)) != len(labels):
            raise ValueError("Duplicate config labels in scenario {}".format(name))

        for label_a, label_b in self.comparisons:
            if label_a not in labels or label_b not in labels:
                raise ValueError("Comparison refers to unknown configs: {} / {}".format(label_a, label_b))

    def __repr__(self):
        return "<Scenario {} ({} configs)>".format(self.name, len(self.configs))

    def config(self, label):
        """Returns the config with the given label."""

        for cfg in self.configs:
            if cfg.label == label:
                return cfg

        raise KeyError(label)

    def to_dict(self):
        return {
            "name": self.name,
            "configs": [cfg.to_dict() for cfg in self.configs],
            "comparisons": [list(pair) for pair in self.comparisons]
        }


def _config(label, n, gt_spec, c_grid=None, trials=None, seed=None,
            candidate=CandidateKind.UNIFORM_RANDOM):
    doc = {
        "label": label,
        "n": n,
        "gt_spec": gt_spec,
        "candidate_spec": {"kind": candidate},
        "trials_per_c": DEFAULT_TRIALS_PER_C if trials is None else trials,
        "master_seed": DEFAULT_SEED if seed is None else seed
    }

    if c_grid is not None:
        doc["c_grid"] = list(c_grid)

    return ExperimentConfig(doc)


def gt1_configs(counts, n, trials=None, seed=None):
    """Balanced ground truths with each of the given cluster counts."""

    return [
        _config("gt1 r={}".format(r), n, {"kind": GroundTruthKind.UNIFORM, "r": r},
                trials=trials, seed=seed)
        for r in counts
    ]


def gt2_configs(r, p1_values, n, c_grid=None, trials=None, seed=None):
    """Skewed ground truths with r clusters and each of the given first cluster fractions."""

    return [
        _config("gt2 r={} p1={}".format(r, p1), n, {"kind": GroundTruthKind.SKEWED, "r": r, "p1": p1},
                c_grid=c_grid, trials=trials, seed=seed)
        for p1 in p1_values
    ]


def ratio_configs(ratios, n, c_grid=None, trials=None, seed=None):
    """Ground truths with cluster sizes apportioned from each of the given ratios."""

    return [
        _config("ratio {}".format(":".join(str(part) for part in ratio)), n,
                {"kind": GroundTruthKind.RATIO, "parts": list(ratio)},
                c_grid=c_grid, trials=trials, seed=seed)
        for ratio in ratios
    ]


def _example1(n, trials, seed, full_scale):
    n = n or default_object_count(full_scale)
    cfg = _config("example1", n, {"kind": GroundTruthKind.UNIFORM, "r": 5}, trials=trials, seed=seed)
    return Scenario("example1", [cfg])


def _example2(n, trials, seed, full_scale):
    n = n or default_object_count(full_scale)
    cfg = _config("example2", n, {"kind": GroundTruthKind.SKEWED, "r": 5, "p1": 0.8}, trials=trials, seed=seed)
    return Scenario("example2", [cfg])


def _gt1_sweep(n, trials, seed, full_scale):
    configs = gt1_configs(GT1_CLUSTER_COUNTS, n or default_object_count(full_scale), trials=trials, seed=seed)
    first = configs[0].label
    return Scenario("gt1_sweep", configs, [(first, cfg.label) for cfg in configs[1:]])


def _gt2_sweep(n, trials, seed, full_scale):
    configs = gt2_configs(5, SKEW_GRID, n or default_object_count(full_scale), trials=trials, seed=seed)
    return Scenario("gt2_sweep", configs, [(configs[0].label, configs[-1].label)])


def _h2_ratio_demo(n, trials, seed, full_scale):
    configs = ratio_configs(H2_RATIO_DEMO_RATIOS, n or DEMO_OBJECT_COUNT,
                            c_grid=range(2, 10), trials=trials, seed=seed)
    return Scenario("h2_ratio_demo", configs, [(configs[0].label, configs[-1].label)])


def _pstar_demo(n, trials, seed, full_scale):
    configs = gt2_configs(4, SKEW_GRID, n or DEMO_OBJECT_COUNT, c_grid=range(2, 13), trials=trials, seed=seed)
    return Scenario("pstar_demo", configs, [(configs[0].label, configs[-1].label)])


def _ari_gt_bias(n, trials, seed, full_scale):
    n = n or default_object_count(full_scale)
    configs = [
        _config("ari two_stage f2={}".format(f2), n,
                {"kind": GroundTruthKind.TWO_STAGE, "c_true": 5, "f1": 0.2, "f2": f2},
                trials=trials, seed=seed, candidate=CandidateKind.PINNED_FIRST_CLUSTER)
        for f2 in (0.2, 0.5)
    ]
    return Scenario("ari_gt_bias", configs, [(configs[0].label, configs[1].label)])


_PRESETS = {
    "example1": _example1,
    "example2": _example2,
    "gt1_sweep": _gt1_sweep,
    "gt2_sweep": _gt2_sweep,
    "h2_ratio_demo": _h2_ratio_demo,
    "pstar_demo": _pstar_demo,
    "ari_gt_bias": _ari_gt_bias
}


def scenario_names():
    """Names of the preset scenarios."""

    return sorted(_PRESETS.keys())


def scenario(name, n=None, trials=None, seed=None, full_scale=None):
    """Builds a preset scenario, optionally overriding the object count,
    the number of trials per cluster count and the master seed."""

    try:
        factory = _PRESETS[name]
    except KeyError:
        raise UnknownScenario("Unknown scenario {!r} (valid: {})".format(name, ", ".join(scenario_names())))

    return factory(n, trials, seed, full_scale)


def predictor_grid(n=None, trials=None, seed=None, full_scale=None):
    """Configs over which analytic predictions are checked against trends:
    balanced ground truths and skewed ground truths with five clusters."""

    n = n or default_object_count(full_scale)

    return gt1_configs(PREDICTOR_GRID_UNIFORM, n, trials=trials, seed=seed) + \
        gt2_configs(5, SKEW_GRID, n, trials=trials, seed=seed)
