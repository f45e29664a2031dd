#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Class that implements the JSON codec used for run manifests.
"""

import json

from cvibias.codecs.base import BaseCodec
from cvibias.utils.utils import to_json_obj


class JsonCodec(BaseCodec):
    """JSON codec class. Output keys are sorted so manifests are byte-stable."""

    def to_value(self, value):
        """Deserializes an UTF8 bytes or unicode JSON string."""

        return json.loads(self.to_text(value))

    def to_bytes(self, value):
        """Serializes an object (or anything with to_dict) to an UTF8 bytes JSON string."""

        json_str = json.dumps(to_json_obj(value), indent=2, sort_keys=True)

        return (json_str + "\n").encode("utf8")
