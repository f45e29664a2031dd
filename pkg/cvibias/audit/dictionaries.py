#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Wrapper classes for the experiment configuration dictionaries:
ground truth specs, candidate specs and the experiment config itself.
"""

import hashlib
import json

from cvibias.audit.enums import CandidateKind, GroundTruthKind, Orientation
from cvibias.audit.validation import (SCHEMA_CANDIDATE_SPEC, SCHEMA_EXPERIMENT, SCHEMA_GT_SPEC,
                                      InvalidConfig, validate_document)
from cvibias.indices.enums import ExtraIndexId
from cvibias.indices.registry import ids as index_ids
from cvibias.partition.crisp import ClusterDistribution
from cvibias.partition.generators import (gen_balanced, gen_skewed, gen_two_stage_skewed, gen_uniform_random,
                                          gen_with_pinned_first_cluster, gen_with_sizes, sizes_from_ratio)
from cvibias.support import DEFAULT_SEED
from cvibias.utils.utils import merge_args_kwargs_dict, to_json_obj

DEFAULT_TRIALS_PER_C = 100


class BaseDict(object):
    """Base class for configuration documents represented as dictionaries.
    Fields are declared in the inner Meta class."""

    class Meta:
        fields = set()
        required = set()
        defaults = dict()

    def __init__(self, *args, **kwargs):
        """Constructor.
        Will raise InvalidConfig if there is some required field missing."""

        self._init = merge_args_kwargs_dict(args, kwargs)

        unknown = set(self._init.keys()).difference(self.Meta.fields)

        if unknown:
            raise InvalidConfig("Unknown fields: {}".format(sorted(unknown)))

        for field in getattr(self.Meta, "required", []):
            if field not in self._init:
                raise InvalidConfig("Missing required field: {}".format(field))

    def __getattr__(self, name):
        """Retrieves a declared field from the internal dict or its default."""

        if name.startswith("_") or name not in self.Meta.fields:
            raise AttributeError(name)

        if name in self._init:
            return self._init[name]

        return getattr(self.Meta, "defaults", {}).get(name, None)

    def __eq__(self, other):
        return type(self) is type(other) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "<{} {}>".format(self.__class__.__name__, self.to_dict())

    def to_dict(self):
        """Returns the pure dict (JSON-serializable) representation of this document."""

        ret = {}

        for name in sorted(self.Meta.fields):
            val = getattr(self, name)

            if val is not None:
                ret[name] = to_json_obj(val)

        return ret


class GroundTruthSpec(BaseDict):
    """Describes how the fixed ground truth of an experiment is generated."""

    class Meta:
        fields = {"kind"}
        required = {"kind"}

    @classmethod
    def build(cls, *args, **kwargs):
        """Builds an instance of the appropriate subclass for the given kind."""

        init_dict = merge_args_kwargs_dict(args, kwargs)

        if isinstance(init_dict.get("parts"), tuple):
            init_dict["parts"] = list(init_dict["parts"])

        validate_document(init_dict, SCHEMA_GT_SPEC)

        klass_map = {
            GroundTruthKind.UNIFORM: UniformGroundTruth,
            GroundTruthKind.RANDOM: RandomGroundTruth,
            GroundTruthKind.SKEWED: SkewedGroundTruth,
            GroundTruthKind.TWO_STAGE: TwoStageGroundTruth,
            GroundTruthKind.RATIO: RatioGroundTruth
        }

        kind = init_dict.get("kind")
        klass = klass_map.get(kind)

        if not klass:
            raise InvalidConfig("Unknown ground truth kind: {}".format(kind))

        return klass(init_dict)

    @property
    def num_clusters(self):
        """Number of ground truth clusters."""

        raise NotImplementedError()

    def generate(self, n, rng):
        """Generates the ground truth partition of n objects."""

        raise NotImplementedError()

    def nominal_distribution(self):
        """Cluster distribution the protocol aims at, or None if it depends on the draw."""

        return None

    def describe(self):
        """Short human readable description."""

        raise NotImplementedError()


class UniformGroundTruth(GroundTruthSpec):
    """r clusters of (almost) equal size placed at random."""

    class Meta:
        fields = {"kind", "r"}
        required = {"kind", "r"}

    @property
    def num_clusters(self):
        return self.r

    def generate(self, n, rng):
        return gen_balanced(n, self.r, rng)

    def nominal_distribution(self):
        return ClusterDistribution.balanced(self.r)

    def describe(self):
        return "uniform({})".format(self.r)


class RandomGroundTruth(GroundTruthSpec):
    """r clusters with labels drawn uniformly at random."""

    class Meta:
        fields = {"kind", "r"}
        required = {"kind", "r"}

    @property
    def num_clusters(self):
        return self.r

    def generate(self, n, rng):
        return gen_uniform_random(n, self.r, rng)

    def nominal_distribution(self):
        return ClusterDistribution.balanced(self.r)

    def describe(self):
        return "random({})".format(self.r)


class SkewedGroundTruth(GroundTruthSpec):
    """A first cluster holding a fraction p1 of the objects and r - 1 random clusters."""

    class Meta:
        fields = {"kind", "r", "p1"}
        required = {"kind", "r", "p1"}

    @property
    def num_clusters(self):
        return self.r

    def generate(self, n, rng):
        return gen_skewed(n, self.r, self.p1, rng)

    def nominal_distribution(self):
        rest = (1.0 - self.p1) / (self.r - 1)
        return ClusterDistribution([self.p1] + [rest] * (self.r - 1))

    def describe(self):
        return "skewed({}, {})".format(self.r, self.p1)


class TwoStageGroundTruth(GroundTruthSpec):
    """Two successive skewed splits followed by c_true - 2 random clusters."""

    class Meta:
        fields = {"kind", "c_true", "f1", "f2"}
        required = {"kind", "c_true", "f1", "f2"}

    @property
    def num_clusters(self):
        return self.c_true

    def generate(self, n, rng):
        return gen_two_stage_skewed(n, self.c_true, self.f1, self.f2, rng)

    def nominal_distribution(self):
        second = (1.0 - self.f1) * self.f2
        rest = (1.0 - self.f1 - second) / (self.c_true - 2)
        return ClusterDistribution([self.f1, second] + [rest] * (self.c_true - 2))

    def describe(self):
        return "two_stage({}, {}, {})".format(self.c_true, self.f1, self.f2)


class RatioGroundTruth(GroundTruthSpec):
    """Cluster sizes apportioned from an integer ratio, placed at random."""

    class Meta:
        fields = {"kind", "parts"}
        required = {"kind", "parts"}

    @property
    def num_clusters(self):
        return len(self.parts)

    def generate(self, n, rng):
        return gen_with_sizes(sizes_from_ratio(n, self.parts), rng)

    def nominal_distribution(self):
        return ClusterDistribution.from_sizes(self.parts)

    def describe(self):
        return "ratio({})".format(":".join(str(part) for part in self.parts))


class CandidateSpec(BaseDict):
    """Describes how the candidate partitions with c clusters are generated."""

    class Meta:
        fields = {"kind"}
        required = {"kind"}

    @classmethod
    def build(cls, *args, **kwargs):
        """Builds an instance of the appropriate subclass for the given kind."""

        init_dict = merge_args_kwargs_dict(args, kwargs)

        validate_document(init_dict, SCHEMA_CANDIDATE_SPEC)

        klass_map = {
            CandidateKind.UNIFORM_RANDOM: UniformRandomCandidates,
            CandidateKind.BALANCED: BalancedCandidates,
            CandidateKind.PINNED_FIRST_CLUSTER: PinnedFirstClusterCandidates,
            CandidateKind.COPY: CopyCandidates
        }

        return klass_map[init_dict["kind"]](init_dict)

    def generate(self, gt, c, rng):
        """Generates one candidate with c clusters for the given ground truth."""

        raise NotImplementedError()


class UniformRandomCandidates(CandidateSpec):
    """Labels drawn uniformly at random."""

    def generate(self, gt, c, rng):
        return gen_uniform_random(len(gt), c, rng)


class BalancedCandidates(CandidateSpec):
    """Balanced cluster sizes placed at random."""

    def generate(self, gt, c, rng):
        return gen_balanced(len(gt), c, rng)


class PinnedFirstClusterCandidates(CandidateSpec):
    """Copies cluster 0 of the ground truth and draws the other labels at random."""

    def generate(self, gt, c, rng):
        return gen_with_pinned_first_cluster(gt, c, rng)


class CopyCandidates(CandidateSpec):
    """The ground truth itself, whatever the requested cluster count."""

    def generate(self, gt, c, rng):
        return gt


def default_c_grid(c_true):
    """Candidate cluster counts 2..3 * c_true."""

    return list(range(2, 3 * c_true + 1))


class ExperimentConfig(BaseDict):
    """Monte Carlo experiment: one fixed ground truth, trials_per_c
    random candidates for every cluster count in c_grid."""

    class Meta:
        fields = {
            "label",
            "n",
            "gt_spec",
            "candidate_spec",
            "c_grid",
            "trials_per_c",
            "master_seed",
            "indices",
            "orientation"
        }

        required = {
            "n",
            "gt_spec",
            "candidate_spec"
        }

        defaults = {
            "trials_per_c": DEFAULT_TRIALS_PER_C,
            "master_seed": DEFAULT_SEED,
            "orientation": Orientation.CANDIDATE_FIRST
        }

    def __init__(self, *args, **kwargs):
        init_dict = merge_args_kwargs_dict(args, kwargs)

        for key in ("gt_spec", "candidate_spec"):
            if hasattr(init_dict.get(key), "to_dict"):
                init_dict[key] = init_dict[key].to_dict()

        for key in ("c_grid", "indices"):
            if init_dict.get(key) is not None:
                init_dict[key] = list(init_dict[key])

        super(ExperimentConfig, self).__init__(init_dict)

        validate_document(self._init, SCHEMA_EXPERIMENT)

        self._gt_spec = GroundTruthSpec.build(self._init["gt_spec"])
        self._candidate_spec = CandidateSpec.build(self._init["candidate_spec"])

        if any(c > self.n for c in self.c_grid):
            raise InvalidConfig("Cluster counts must not exceed n={}".format(self.n))

        if self._candidate_spec.kind != CandidateKind.COPY and any(c < 2 for c in self.c_grid):
            raise InvalidConfig("Candidate cluster counts must be >= 2")

        known = set(index_ids()).union(ExtraIndexId.list())
        unknown = [idx for idx in self.indices if idx not in known]

        if unknown:
            raise InvalidConfig("Unknown indices: {}".format(unknown))

    def __getattr__(self, name):
        if name == "gt_spec":
            return self._gt_spec

        if name == "candidate_spec":
            return self._candidate_spec

        if name == "c_grid" and "c_grid" not in self._init:
            return default_c_grid(self._gt_spec.num_clusters)

        if name == "indices" and "indices" not in self._init:
            return index_ids()

        if name == "label" and "label" not in self._init:
            return self._gt_spec.describe()

        return super(ExperimentConfig, self).__getattr__(name)

    def replace(self, **kwargs):
        """Returns a copy of this config with some fields replaced."""

        init_dict = dict(self._init)
        init_dict.update(kwargs)

        return ExperimentConfig(init_dict)

    def fingerprint(self):
        """Short stable digest of the full configuration."""

        doc = json.dumps(self.to_dict(), sort_keys=True)

        return hashlib.sha256(doc.encode("utf8")).hexdigest()[:12]
