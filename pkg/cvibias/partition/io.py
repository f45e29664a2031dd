#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Reading and writing partitions as plain text label files.
"""

import io

from cvibias.codecs.text import LabelFileCodec
from cvibias.exceptions import LabelFileError
from cvibias.partition.crisp import from_labels


def read_label_file(path):
    """Reads a label file (one label per line, line i is object i) into a partition."""

    try:
        with io.open(path, "rb") as fh:
            raw = fh.read()
    except (IOError, OSError) as ex:
        raise LabelFileError("Cannot read {}: {}".format(path, ex))

    return from_labels(LabelFileCodec().to_value(raw))


def write_label_file(path, partition):
    """Writes the dense labels of a partition to a label file."""

    with io.open(path, "wb") as fh:
        fh.write(LabelFileCodec().to_bytes(partition.to_list()))
