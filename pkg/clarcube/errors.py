# clarcube/errors.py
# ==================
#
# Copying
# -------
#
# Copyright (c) 2026 clarcube authors and contributors.
#
# This file is part of the *clarcube* project.
#
# Clarcube is a free software project. You can redistribute it and/or
# modify it following the terms of the MIT License.
#
# This software project is distributed *as is*, WITHOUT WARRANTY OF ANY
# KIND; including but not limited to the WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE and NONINFRINGEMENT.
#
# You should have received a copy of the MIT License along with
# *clarcube*. If not, see <http://opensource.org/licenses/MIT>.
#
"""Exceptions raised by the clarcube computations."""
import typing as ty


class ClarcubeError(Exception):
    """Base class of all errors raised on purpose by this package."""


class HexParseError(ClarcubeError, ValueError):
    """A ``.hex`` document could not be read.


    :param message: What went wrong.
    :type message: str

    :param lineno: One-based number of the offending line.
    :type lineno: int

    """

    def __init__(self, message: str, lineno: int):
        """Constructor for :class:`clarcube.errors.HexParseError`."""
        super(HexParseError, self).__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class ValidationError(ClarcubeError, ValueError):
    """Input data does not describe a valid object.


    :param message: What went wrong.
    :type message: str

    :param data: The offending data, if any.
    :type data: ~typing.Any

    """

    def __init__(self, message: str, data: ty.Any = None):
        """Constructor for :class:`clarcube.errors.ValidationError`."""
        super(ValidationError, self).__init__(message)
        self.data = data


class LimitError(ClarcubeError, RuntimeError):
    """An enumeration went over its configured cap.


    :param what: The kind of object being counted.
    :type what: str

    :param limit: The cap that was exceeded.
    :type limit: int

    """

    def __init__(self, what: str, limit: int):
        """Constructor for :class:`clarcube.errors.LimitError`."""
        super(LimitError, self).__init__(f"more than {limit} {what}.")
        self.what = what
        self.limit = limit


class NotKekuleanError(ClarcubeError, ValueError):
    """The system has no perfect matching, hence no Clar cover."""


class VerificationError(ClarcubeError, AssertionError):
    """A claimed property does not hold.


    :param message: The property that failed.
    :type message: str

    :param witness: Concrete data showing the failure.
    :type witness: ~typing.Any

    """

    def __init__(self, message: str, witness: ty.Any = None):
        """Constructor for :class:`clarcube.errors.VerificationError`."""
        super(VerificationError, self).__init__(message)
        self.witness = witness


class InternalError(ClarcubeError, RuntimeError):
    """A construction produced an inconsistent object."""
