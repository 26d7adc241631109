# clarcube/callable.py
# ====================
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
"""Callable facilities."""
import typing as ty
import logging
import functools


log = logging.getLogger(__name__)

C = ty.TypeVar("C", bound=ty.Callable)


class retry(object):
    """Call the decorated function again when one of the listed exceptions is
    raised. Once ``attempts`` calls have failed, the latest exception is raised
    on last resort.

    The decorated function is called with the same arguments every time, so a
    randomized function must draw from a generator it is given rather than
    from a fresh seed::

        >>> @retry(ValueError, attempts=3)
        ... def draw(rng):
        ...     x = rng.random()
        ...     if x < 0.5:
        ...         raise ValueError(x)
        ...     return x


    :param exception: The exceptions for which a new attempt is made.
    :type exception: ~typing.Type[Exception]

    :param attempts: The number of calls made before giving up.
    :type attempts: int

    """

    def __init__(self, *exception: ty.Type[Exception], attempts: int):
        """Constructor for :class:`clarcube.callable.retry`."""
        if attempts < 1:
            raise ValueError("attempts value must be positive.")
        self.exception = exception
        self.attempts = attempts

    def __call__(self, fn: C) -> C:
        """Wrap the decorated function to be retried.


        :param fn: The function to be retried.
        :type fn: ~typing.Callable


        :returns: The given callable, wrapped to be retried as requested.
        :rtype: ~typing.Callable

        """

        @functools.wraps(fn)
        def _wrapper(*args, **kwargs):
            _exc = None
            for i in range(self.attempts):
                try:
                    return fn(*args, **kwargs)
                except self.exception as e:
                    log.debug(f"{fn.__name__}: attempt {i} rejected with `{e!r}`.")
                    _exc = e
            log.error(f"{fn.__name__}: gave up after {self.attempts} attempts.")
            raise _exc

        return _wrapper
