#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exceptions raised across the package.
"""


class CviBiasException(Exception):
    """Base exception for all errors raised by this package."""

    DEFAULT_MSG = "Cluster validity error"

    def __init__(self, *args, **kwargs):
        if not (args or kwargs):
            args = (self.DEFAULT_MSG,)

        super(CviBiasException, self).__init__(*args, **kwargs)


class EmptyInput(CviBiasException):
    """Exception raised when a partition is built from an empty label sequence."""

    DEFAULT_MSG = "Empty label sequence"


class InvalidSize(CviBiasException):
    """Exception raised when a generator receives an object or
    cluster count that cannot yield a partition with non-empty clusters."""

    DEFAULT_MSG = "Invalid object or cluster count"


class InvalidDistribution(CviBiasException):
    """Exception raised when cluster probabilities are not a valid distribution."""

    DEFAULT_MSG = "Invalid cluster distribution"


class LengthMismatch(CviBiasException):
    """Exception raised when two partitions do not label the same objects."""

    DEFAULT_MSG = "Partitions have different lengths"


class PairCountOverflow(CviBiasException):
    """Exception raised when the number of object pairs exceeds the integer width contract."""

    DEFAULT_MSG = "Pair count exceeds 63 bits"


class CapExceeded(CviBiasException):
    """Exception raised when the brute-force pair counter receives too many objects."""

    DEFAULT_MSG = "Object count exceeds the brute-force cap"


class NotDivisible(CviBiasException):
    """Exception raised when a product contingency table would have fractional cells."""

    DEFAULT_MSG = "Product table has fractional cells"


class UnknownIndex(CviBiasException):
    """Exception raised for index ids that are not in the registry."""

    DEFAULT_MSG = "Unknown index"


class InvalidBeta(CviBiasException):
    """Exception raised for non-positive entropy orders."""

    DEFAULT_MSG = "Entropy order must be positive"


class InvalidArgument(CviBiasException):
    """Exception raised when a numeric argument is outside its domain."""

    DEFAULT_MSG = "Invalid argument"


class InsufficientPoints(CviBiasException):
    """Exception raised when a trend curve has too few usable points to be classified."""

    DEFAULT_MSG = "Not enough non-degenerate points"


class IndexSetMismatch(CviBiasException):
    """Exception raised when two sets of trend curves do not cover the same indices."""

    DEFAULT_MSG = "Curve sets cover different indices"


class UnknownScenario(CviBiasException):
    """Exception raised for scenario preset names that do not exist."""

    DEFAULT_MSG = "Unknown scenario"


class LabelFileError(CviBiasException):
    """Exception raised when a label file cannot be read or parsed."""

    DEFAULT_MSG = "Invalid label file"
