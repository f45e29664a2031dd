#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Class that implements the label file codec.
"""

from cvibias.codecs.base import BaseCodec
from cvibias.exceptions import EmptyInput, LabelFileError


class LabelFileCodec(BaseCodec):
    """Plain text label files: one label token per line, line i is object i.
    Blank lines are ignored and surrounding whitespace is stripped."""

    def to_value(self, value):
        """Decodes a label file into a list of string tokens."""

        try:
            text = self.to_text(value)
        except UnicodeDecodeError as ex:
            raise LabelFileError("Label file is not valid UTF8: {}".format(ex))

        tokens = [line.strip() for line in text.splitlines()]
        tokens = [token for token in tokens if token]

        if not tokens:
            raise EmptyInput("Label file contains no labels")

        return tokens

    def to_bytes(self, value):
        """Encodes a sequence of labels, one per line."""

        return "".join("{}\n".format(label) for label in value).encode("utf8")
