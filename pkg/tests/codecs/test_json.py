#!/usr/bin/env python
# -*- coding: utf-8 -*-

import json

from cvibias.codecs.json_codec import JsonCodec
from cvibias.theory.predictors import predict_nc_bias
from cvibias.partition.crisp import ClusterDistribution
from tests.utils import assert_equal_dict


def test_json_codec():
    """Content may be serialized to and deserialized from JSON."""

    test_dict = {"unicode": "áéíóú", "ascii": "hello", "num": 100}
    test_unicode = u'{"unicode": "áéíóú", "ascii": "hello", "num": 100}'
    test_bytes = test_unicode.encode("utf8")

    json_codec = JsonCodec()

    dict_from_unicode = json_codec.to_value(test_unicode)
    dict_from_bytes = json_codec.to_value(test_bytes)
    bytes_from_dict = json_codec.to_bytes(test_dict)

    assert_equal_dict(dict_from_unicode, test_dict)
    assert_equal_dict(dict_from_bytes, test_dict)

    assert isinstance(bytes_from_dict, bytes)
    assert_equal_dict(json.loads(bytes_from_dict.decode("utf8")), test_dict)


def test_json_codec_stable_output():
    """Keys are sorted, so equal documents give equal bytes."""

    json_codec = JsonCodec()

    assert json_codec.to_bytes({"b": 1, "a": [1, 2]}) == json_codec.to_bytes({"a": (1, 2), "b": 1})


def test_json_codec_objects():
    """Objects exposing to_dict are serialized through it."""

    verdict = predict_nc_bias(ClusterDistribution([0.5, 0.5]))
    doc = JsonCodec().to_value(JsonCodec().to_bytes({"verdict": verdict}))

    assert doc["verdict"]["status"] == "NCneu"
    assert doc["verdict"]["h2"] == 1.0
