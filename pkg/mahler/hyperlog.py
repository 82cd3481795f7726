# Copyright 2026 (C) The mahler developers
#
# This file is part of mahler.
#
# mahler is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# mahler is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with mahler.  If not, see <http://www.gnu.org/licenses/>.

"""
Hyperlogarithms as iterated integrals along explicit paths, and the
analytic continuation of multiple polylogarithms they provide.

A word ``(b_1, ..., b_w)`` names the iterated integral

    I = integral over 0 < t_1 < ... < t_w < z (along a path) of
        dt_1 / (t_1 - b_1) ... dt_w / (t_w - b_w)

and the multiple polylogarithm is recovered through

    Li_{n_1..n_m}(x_1..x_m) = (-1)**m I_{n_1..n_m}(a_1 : ... : a_m : 1),
    a_i = 1 / (x_i * ... * x_m),

where ``I_{n_1..n_m}(a_1 : ... : a_m : z)`` expands to the word
``(a_1, 0 * (n_1 - 1), a_2, 0 * (n_2 - 1), ...)``. Choosing a path from
0 to 1 that dodges the poles selects a branch of the continuation.

.. autosummary::
    :toctree:

    HyperlogWord
    BranchChoice
    eval_hyperlog
    li_continued
    configure
"""

import math
import logging
import functools
from collections import namedtuple

import mpmath
import numpy as np

from . import polylog
from .numerics_core import (ValueWithError, NumericalFailure, PoleOnPath,
                            straight_path, semicircle_path, ode_along_path)

logger = logging.getLogger("mahler.hyperlog")

__all__ = ["HyperlogWord", "BranchChoice", "DEFAULT", "REAL_SEGMENT",
           "LOWER_SEMICIRCLE", "UPPER_SEMICIRCLE", "eval_hyperlog",
           "li_continued", "configure", "ContinuationError"]

_settings = {"clearance_min": 1e-3, "local_tol": 1e-12, "cache_size": 4096}
_COINCIDE = 1e-12


def configure(config):
    """
    Apply the ``hyperlog`` section of a mahler config (``clearance_min``,
    ``local_tol``, ``cache_size``) and clear the value cache.
    """
    section = config.get("hyperlog", {}) if config else {}
    unknown = set(section) - set(_settings)
    if unknown:
        raise ValueError("unknown hyperlog settings: {0}"
                         .format(", ".join(sorted(unknown))))
    _settings.update(section)
    global _cached_transport
    _cached_transport = functools.lru_cache(
        maxsize=_settings["cache_size"])(_transport)


class HyperlogWord(namedtuple("HyperlogWord", ["poles", "source"])):
    """
    The expanded pole sequence of a hyperlogarithm, with the
    ``(indices, args)`` of the polylogarithm it came from (or ``None``).
    """

    __slots__ = ()

    def __new__(cls, poles, source=None):
        poles = tuple(complex(b) for b in poles)
        if not poles:
            raise ValueError("empty word")
        if poles[0] == 0:
            raise ValueError("the first letter of a word must be non-zero")
        return super(HyperlogWord, cls).__new__(cls, poles, source)

    @property
    def weight(self):
        return len(self.poles)

    @classmethod
    def from_polylog(cls, indices, args):
        """The word of ``I_{n}(a_1 : ... : a_m : 1)`` for ``Li_n(x)``."""
        indices = polylog.MultiIndex(indices)
        xs = [complex(x) for x in args]
        if len(xs) != indices.depth:
            raise ValueError("{0} arguments for a depth {1} index"
                             .format(len(xs), indices.depth))
        if any(x == 0 for x in xs):
            raise polylog.DomainError("a zero argument puts a pole at "
                                      "infinity; the series is zero instead")

        poles = []
        for i, n in enumerate(indices):
            poles.append(1 / complex(np.prod(xs[i:])))
            poles.extend([0j] * (n - 1))
        return cls(poles, (tuple(indices), tuple(xs)))


_KINDS = ("default", "real_segment", "lower_semicircle", "upper_semicircle",
          "custom")


class BranchChoice(namedtuple("BranchChoice", ["kind", "path"])):
    """
    Which path from 0 to the end point a hyperlogarithm is integrated
    along.

    ``default`` takes the straight segment when every pole clears it and
    the lower semicircle otherwise; ``custom`` carries an explicit
    :class:`~mahler.numerics_core.IntegrationPath`.
    """

    __slots__ = ()

    def __new__(cls, kind="default", path=None):
        if kind not in _KINDS:
            raise ValueError("unknown branch {0!r}".format(kind))
        if (kind == "custom") != (path is not None):
            raise ValueError("a path is given exactly for custom branches")
        return super(BranchChoice, cls).__new__(cls, kind, path)

    def resolve(self, endpoint, poles):
        """The concrete branch kind used for *poles* towards *endpoint*."""
        if self.kind != "default":
            return self.kind
        segment = straight_path(0, endpoint)
        scale = max(1.0, abs(endpoint))
        limit = _settings["clearance_min"] * abs(endpoint)
        for b in poles:
            if abs(b) <= _COINCIDE * scale or \
                    abs(b - endpoint) <= _COINCIDE * scale:
                continue
            if segment.clearance([b]) < limit:
                return "lower_semicircle"
        return "real_segment"

    def path_to(self, endpoint, poles=()):
        kind = self.resolve(endpoint, poles)
        if kind == "real_segment":
            return straight_path(0, endpoint)
        if kind == "lower_semicircle":
            return semicircle_path(endpoint, lower=True)
        if kind == "upper_semicircle":
            return semicircle_path(endpoint, lower=False)
        return self.path


DEFAULT = BranchChoice("default")
REAL_SEGMENT = BranchChoice("real_segment")
LOWER_SEMICIRCLE = BranchChoice("lower_semicircle")
UPPER_SEMICIRCLE = BranchChoice("upper_semicircle")


def _transport(poles, endpoint, kind, local_tol, clearance):
    path = BranchChoice(kind).path_to(endpoint, poles)
    return _run(path, poles, local_tol, clearance)


_cached_transport = functools.lru_cache(maxsize=4096)(_transport)


def _run(path, poles, local_tol, clearance):
    values = ode_along_path(path, poles, local_tol=local_tol,
                            clearance_min=clearance * path.length(),
                            allow_end_pole=True)
    value = values[-1]
    if value is None:
        raise ContinuationError("the last letter sits on the end point, so "
                                "the iterated integral diverges")
    return value


def eval_hyperlog(word, endpoint=1.0, branch=DEFAULT):
    """
    The iterated integral of *word* from 0 to *endpoint* along the path
    *branch* selects.

    Values for the named branches are cached on the exact
    ``(poles, endpoint, branch)`` key.

    :returns: :class:`~mahler.numerics_core.ValueWithError`
    :raises PoleOnPath: if the path passes through a pole; another branch
                        is needed
    :raises ContinuationError: if the integral diverges at the end point
    """
    if not isinstance(word, HyperlogWord):
        word = HyperlogWord(word)
    endpoint = complex(endpoint)
    local_tol = _settings["local_tol"]
    clearance = _settings["clearance_min"]

    if branch.kind == "custom":
        value = _run(branch.path, word.poles, local_tol, clearance)
    else:
        kind = branch.resolve(endpoint, word.poles)
        try:
            value = _cached_transport(word.poles, endpoint, kind, local_tol,
                                      clearance)
        except PoleOnPath as e:
            raise PoleOnPath(e.pole, e.index, "pole on the {0} path; try "
                             "another branch".format(kind))

    error = 1e3 * local_tol * word.weight * max(1.0, abs(value))
    logger.debug("I{0} to {1} on {2}: {3}".format(word.poles, endpoint,
                                                  branch.kind, value))
    return ValueWithError(value, error)


def _depth_one(n, x, branch):
    # closed forms for Li_n(x) on the straight segment and, for real x > 1,
    # on either semicircle; None when the ODE route is needed
    eps = np.finfo(float).eps
    on_cut = x.imag == 0 and x.real > 1

    if not on_cut:
        if branch.kind not in ("default", "real_segment"):
            return None
        if abs(x) <= 1:
            return polylog.li(n, x)
        with mpmath.workdps(25):
            value = complex(mpmath.polylog(n, x))
        return ValueWithError(value, 4 * eps * max(1.0, abs(value)))

    kind = branch.resolve(1.0, [1 / x])
    if kind == "real_segment":
        raise PoleOnPath(1 / x, 0, "Li_{0}({1}) has its pole on the real "
                         "segment; choose a semicircle".format(n, x.real))
    if kind not in ("lower_semicircle", "upper_semicircle"):
        return None

    # Li_n(x -+ i0) = Re Li_n(x) -+ i pi log(x)**(n-1) / (n-1)!
    with mpmath.workdps(25):
        real = float(mpmath.re(mpmath.polylog(n, x.real)))
    imag = math.pi * math.log(x.real) ** (n - 1) / math.factorial(n - 1)
    if kind == "lower_semicircle":
        imag = -imag
    value = complex(real, imag)
    return ValueWithError(value, 4 * eps * max(1.0, abs(value)))


def li_continued(indices, args, branch=DEFAULT):
    """
    The multiple polylogarithm ``Li_{indices}(args)`` continued along the
    path *branch* picks for the word ``I(a_1 : ... : a_m : 1)``.

    Depth one uses closed forms where the branch allows (principal values
    off the cut, and ``Re Li_n(x) -+ i pi log(x)**(n-1)/(n-1)!`` for real
    x > 1 below or above); everything else is integrated.

    :raises polylog.DomainError: for a zero argument
    :raises ContinuationError: if the integral diverges at 1
    """
    indices = polylog.MultiIndex(indices)
    xs = [complex(x) for x in args]
    word = HyperlogWord.from_polylog(indices, xs)

    if indices.depth == 1:
        n, x = indices[0], xs[0]
        if x == 1:
            if n == 1:
                raise ContinuationError("Li_1(1) diverges")
            return polylog.li(n, 1)
        value = _depth_one(n, x, branch)
        if value is not None:
            return value

    value = eval_hyperlog(word, 1.0, branch)
    return value if indices.depth % 2 == 0 else -value


class ContinuationError(NumericalFailure):
    """An iterated integral diverges or cannot be continued"""
    pass
