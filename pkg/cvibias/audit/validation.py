#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
JSON schemas used to validate experiment configuration documents.
"""

import jsonschema

from cvibias.audit.enums import CandidateKind, GroundTruthKind, Orientation, TrendScale
from cvibias.exceptions import CviBiasException

SCHEMA_FRACTION = {
    "type": "number",
    "exclusiveMinimum": 0,
    "exclusiveMaximum": 1
}

SCHEMA_GT_UNIFORM = {
    "type": "object",
    "properties": {
        "kind": {"enum": [GroundTruthKind.UNIFORM, GroundTruthKind.RANDOM]},
        "r": {"type": "integer", "minimum": 1}
    },
    "required": ["kind", "r"]
}

SCHEMA_GT_SKEWED = {
    "type": "object",
    "properties": {
        "kind": {"const": GroundTruthKind.SKEWED},
        "r": {"type": "integer", "minimum": 2},
        "p1": SCHEMA_FRACTION
    },
    "required": ["kind", "r", "p1"]
}

SCHEMA_GT_TWO_STAGE = {
    "type": "object",
    "properties": {
        "kind": {"const": GroundTruthKind.TWO_STAGE},
        "c_true": {"type": "integer", "minimum": 3},
        "f1": SCHEMA_FRACTION,
        "f2": SCHEMA_FRACTION
    },
    "required": ["kind", "c_true", "f1", "f2"]
}

SCHEMA_GT_RATIO = {
    "type": "object",
    "properties": {
        "kind": {"const": GroundTruthKind.RATIO},
        "parts": {
            "type": "array",
            "items": {"type": "integer", "minimum": 1},
            "minItems": 1
        }
    },
    "required": ["kind", "parts"]
}

SCHEMA_GT_SPEC = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "oneOf": [
        SCHEMA_GT_UNIFORM,
        SCHEMA_GT_SKEWED,
        SCHEMA_GT_TWO_STAGE,
        SCHEMA_GT_RATIO
    ]
}

SCHEMA_CANDIDATE_SPEC = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "properties": {
        "kind": {"enum": CandidateKind.list()}
    },
    "required": ["kind"]
}

SCHEMA_EXPERIMENT = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "properties": {
        "label": {"type": "string", "minLength": 1},
        "n": {"type": "integer", "minimum": 2},
        "gt_spec": SCHEMA_GT_SPEC,
        "candidate_spec": SCHEMA_CANDIDATE_SPEC,
        "c_grid": {
            "type": "array",
            "items": {"type": "integer", "minimum": 1},
            "minItems": 1,
            "uniqueItems": True
        },
        "trials_per_c": {"type": "integer", "minimum": 1},
        "master_seed": {"type": "integer", "minimum": 0, "maximum": 2 ** 64 - 1},
        "indices": {
            "type": "array",
            "items": {"type": "string"},
            "minItems": 1
        },
        "orientation": {"enum": Orientation.list()}
    },
    "required": ["n", "gt_spec", "candidate_spec"]
}

SCHEMA_TREND_THRESHOLDS = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "properties": {
        "rho": {"type": "number", "exclusiveMinimum": 0, "maximum": 1},
        "flat": {"type": "number", "minimum": 0},
        "noise": {"type": "number", "minimum": 0},
        "scale": {"enum": TrendScale.list()}
    }
}


class InvalidConfig(CviBiasException):
    """Exception raised when an experiment configuration document has an invalid format."""

    DEFAULT_MSG = "Invalid experiment configuration"


def validate_document(doc, schema):
    """Validates a document against a schema. Raises InvalidConfig if validation fails."""

    try:
        jsonschema.validate(doc, schema)
    except (jsonschema.ValidationError, TypeError) as ex:
        raise InvalidConfig(getattr(ex, "message", str(ex)))
