#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Classes that implement the CSV table codecs.
"""

import csv
import io

from cvibias.codecs.base import BaseCodec
from cvibias.utils.utils import format_float

DEGENERATE_CELL = "degenerate"


def format_cell(value):
    """Formats a single CSV cell."""

    if value is None:
        return ""

    if isinstance(value, bool):
        return "true" if value else "false"

    if isinstance(value, float):
        return format_float(value)

    return str(value)


class CsvCodec(BaseCodec):
    """Base class for CSV tables with a fixed header.
    Rows are given as dicts keyed by the header fields."""

    FIELDS = ()

    def __init__(self, extra_fields=None):
        self._fields = tuple(self.FIELDS) + tuple(extra_fields or ())

    @property
    def fields(self):
        """Header fields in output order."""

        return self._fields

    def to_value(self, value):
        """Parses a CSV table into a list of dicts with string values."""

        reader = csv.DictReader(io.StringIO(self.to_text(value)))

        return [dict(row) for row in reader]

    def to_bytes(self, value):
        """Serializes an iterable of row dicts, header first."""

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self._fields)

        for row in value:
            writer.writerow([format_cell(row.get(field)) for field in self._fields])

        return buf.getvalue().encode("utf8")


class CurvesCsvCodec(CsvCodec):
    """One row per (index, c) of a trend curve."""

    FIELDS = ("scenario", "index", "c", "mean", "stderr", "trials", "degenerate", "seed")


class VerdictCsvCodec(CsvCodec):
    """One row per index verdict, analytic or empirical."""

    FIELDS = ("scenario", "index", "status", "source", "discriminant", "h2")


class GtBiasCsvCodec(CsvCodec):
    """One row per index of a ground truth bias comparison."""

    FIELDS = ("scenario", "index", "status_a", "status_b", "gt_bias")


class ScoresCsvCodec(CsvCodec):
    """Index values of a single partition comparison."""

    FIELDS = ("index", "value")


class PredictionCsvCodec(CsvCodec):
    """Analytic prediction for a single distribution."""

    FIELDS = ("status", "source", "discriminant", "h2", "pstar")


class PStarCsvCodec(CsvCodec):
    """Skew threshold per number of ground truth clusters."""

    FIELDS = ("r", "pstar")
