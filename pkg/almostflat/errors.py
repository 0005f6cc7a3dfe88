"""
    @file:              errors.py
    @Author:            Maxence Larose

    @Creation Date:     01/2022
    @Last modification: 10/2026

    @Description:       This file contains the exceptions raised by the almostflat package. Every error raised on
                        purpose by the library derives from AlmostFlatError.
"""

from typing import Any, Optional


class AlmostFlatError(Exception):
    """
    Base class of every error raised on purpose by the library.
    """


class ComplexError(AlmostFlatError, ValueError):
    """
    Malformed complex, simplex outside a complex, invalid path or invalid contraction witness.
    """


class MismatchError(AlmostFlatError, ValueError):
    """
    Two objects that must share a base, a rank, a depth or a presentation do not.
    """


class SchemaError(AlmostFlatError, ValueError):
    """
    A JSON document does not follow its schema.
    """


class PreconditionError(AlmostFlatError):
    """
    A numerical precondition is violated (norm bound, diameter bound, branch safety, ...).
    """


class ThresholdError(PreconditionError):
    """
    A flatness or defect measure exceeds the working threshold of an operation.
    """

    def __init__(
            self,
            message: str,
            where: Optional[Any] = None,
            value: Optional[float] = None
    ):
        """
        Constructor of the class ThresholdError.

        Parameters
        ----------
        message : str
            Human readable message.
        where : Optional[Any]
            The simplex, edge or loop on which the threshold was exceeded.
        value : Optional[float]
            The offending measured value.
        """
        super().__init__(message)
        self.where = where
        self.value = value
