#!/usr/bin/env python
# -*- coding: utf-8 -*-

import pytest

from cvibias.codecs.base import BaseCodec
from cvibias.codecs.csv_codec import CurvesCsvCodec, ScoresCsvCodec
from cvibias.codecs.json_codec import JsonCodec
from cvibias.codecs.text import LabelFileCodec

CODECS = [LabelFileCodec, JsonCodec, ScoresCsvCodec, CurvesCsvCodec]


def test_base_codec_is_abstract():
    """The base codec only defines the interface."""

    codec = BaseCodec()

    with pytest.raises(NotImplementedError):
        codec.to_value(b"")

    with pytest.raises(NotImplementedError):
        codec.to_bytes([])

    assert BaseCodec.to_text(b"caf\xc3\xa9") == u"café"
    assert BaseCodec.to_text(u"café") == u"café"


@pytest.mark.parametrize("codec_cls", CODECS)
def test_codecs_implement_interface(codec_cls):
    """Every concrete codec is a BaseCodec with exactly the encode and decode operations."""

    codec = codec_cls()
    interface = sorted(name for name in vars(BaseCodec) if not name.startswith("_"))

    assert isinstance(codec, BaseCodec)
    assert interface == ["to_bytes", "to_text", "to_value"]
    assert type(codec).to_value is not BaseCodec.to_value
    assert type(codec).to_bytes is not BaseCodec.to_bytes
