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
Classical and multiple polylogarithms by their defining power series,
zeta values, Li_k(-1) and the Bloch-Wigner dilogarithm.

The multiple polylogarithm

    Li_{n_1,...,n_m}(x_1, ..., x_m) =
        sum over 0 < k_1 < ... < k_m of prod_j x_j**k_j / k_j**n_j

is only summed where that series converges, that is where every suffix
product ``x_j * ... * x_m`` lies in the closed unit disc (with the usual
exceptions at 1). Anything outside raises :exc:`DomainError`; analytic
continuation lives in :mod:`mahler.hyperlog`.
"""

import math
import cmath
import logging
from collections import namedtuple

import mpmath
import numpy as np
from scipy import signal, special

from .numerics_core import ValueWithError, ConvergenceFailure

logger = logging.getLogger("mahler.polylog")

__all__ = ["MultiIndex", "SeriesBudget", "li", "li_multi", "zeta",
           "li_at_minus_one", "bloch_wigner", "DomainError",
           "MAX_DEPTH"]

MAX_DEPTH = 3

_EPS = np.finfo(float).eps
_UNIT = 1e-14
_DPS = 25


class MultiIndex(tuple):
    """
    A tuple of positive integers ``(n_1, ..., n_m)``.

    :attr:`weight` and :attr:`depth` are computed from the entries.
    """

    def __new__(cls, indices):
        if isinstance(indices, int):
            indices = (indices, )
        indices = tuple(indices)
        if not indices:
            raise ValueError("empty multi-index")
        for n in indices:
            if int(n) != n or n < 1:
                raise ValueError("multi-index entries must be positive "
                                 "integers, got {0!r}".format(indices))
        return super(MultiIndex, cls).__new__(cls, (int(n) for n in indices))

    @property
    def weight(self):
        return sum(self)

    @property
    def depth(self):
        return len(self)


class SeriesBudget(namedtuple("SeriesBudget", ["max_terms", "tol"])):
    """Term cap and target absolute error for series summation."""

    __slots__ = ()

    def __new__(cls, max_terms=2 ** 20, tol=1e-14):
        if max_terms < 1 or not tol > 0:
            raise ValueError("invalid series budget")
        return super(SeriesBudget, cls).__new__(cls, int(max_terms),
                                                float(tol))

    @classmethod
    def from_config(cls, config):
        """Build from the ``series`` section of a mahler config."""
        return cls(**dict(config.get("series", {}) if config else {}))


def _budget(budget):
    return SeriesBudget() if budget is None else budget


def zeta(k):
    """
    The Riemann zeta value at the integer *k* >= 2.

    :returns: float
    :raises DomainError: if *k* < 2
    """
    if int(k) != k or k < 2:
        raise DomainError("zeta({0}) diverges or is not an integer "
                          "argument".format(k))
    return float(special.zeta(int(k)))


def li_at_minus_one(k):
    """``Li_k(-1) = (2**(1 - k) - 1) * zeta(k)``, and ``-log 2`` for k = 1."""
    if int(k) != k or k < 1:
        raise DomainError("Li_{0}(-1) is not defined here".format(k))
    if k == 1:
        return -math.log(2)
    return (2.0 ** (1 - k) - 1) * zeta(k)


def _mp_polylog(n, z, dps=_DPS):
    with mpmath.workdps(dps):
        return complex(mpmath.polylog(n, z))


def li(n, z, budget=None):
    """
    The classical polylogarithm ``Li_n(z) = sum_{k >= 1} z**k / k**n``.

    Valid for ``|z| <= 1`` except ``Li_1(1)``. Small arguments are summed
    directly with a geometric tail bound; larger ones go through mpmath at
    raised working precision, twice, and the error is the change between
    the two runs plus rounding.

    :returns: :class:`ValueWithError`
    :raises DomainError: if the series diverges at *z*
    """
    budget = _budget(budget)
    z = complex(z)
    if int(n) != n or n < 1:
        raise DomainError("Li_n needs a positive integer order, got {0!r}"
                          .format(n))
    n = int(n)
    r = abs(z)

    if r > 1 + _UNIT:
        raise DomainError("Li_{0}({1}) lies outside the disc of convergence; "
                          "use hyperlog.li_continued".format(n, z))
    if z == 0:
        return ValueWithError(0.0, 0.0)
    if abs(z - 1) <= _UNIT:
        if n == 1:
            raise DomainError("Li_1(1) diverges")
        value = zeta(n)
        return ValueWithError(value, 2 * _EPS * value)
    if n == 1:
        value = -cmath.log(1 - z)
        return ValueWithError(value, 4 * _EPS * max(1.0, abs(value)))

    if r <= 0.5:
        terms = int(math.ceil(math.log(budget.tol * (1 - r)) / math.log(r)))
        terms = max(1, min(terms, budget.max_terms))
        k = np.arange(1, terms + 1, dtype=float)
        value = np.sum(z ** k / k ** n)
        tail = r ** (terms + 1) / ((terms + 1) ** n * (1 - r))
        return ValueWithError(value, tail + 4 * _EPS * abs(value))

    # the change against a run at higher precision bounds the mpmath error
    value = _mp_polylog(n, z)
    refined = _mp_polylog(n, z, 2 * _DPS)
    error = abs(refined - value) + 2 * _EPS * max(1.0, abs(refined))
    return ValueWithError(refined, error)


def _innermost(n, y, kind, size, tol):
    # T(k) = sum_{j > k} y**(j - k) / j**n for k = 0 .. size - 1
    k = np.arange(size, dtype=float)
    if kind == "one":
        return special.zeta(n, k + 1).astype(complex), 4 * _EPS

    if kind == "unit":
        limit = -cmath.log(1 - y) if n == 1 else _mp_polylog(n, y)
        j = np.arange(1, size, dtype=float)
        partial = np.concatenate([[0], np.cumsum(y ** j / j ** n)])
        rotate = np.exp(-1j * cmath.phase(y) * k)
        error = 8 * _EPS * (abs(limit) + math.log(size))
        return rotate * (limit - partial), error

    # run past the end so every returned entry has converged
    r = abs(y)
    extra = int(math.ceil(math.log(tol * (1 - r)) / math.log(r))) if r else 1
    extra = min(extra, 4 * size)
    j = np.arange(size + max(1, extra), 0, -1, dtype=float)
    values = signal.lfilter([y], [1, -y], 1 / j ** n)[::-1]
    error = r ** (max(1, extra) + 1) / (1 - r)
    return values[:size], error


def _outer_tail(c, y, kind, size):
    # estimate of sum_{j > N} y**(j - N) c_j, with N = size - 2 and
    # c[j - 1] = c_j for j = 1 .. N + 1
    last = size - 2
    c_next = c[last]
    c_last = c[last - 1]

    if kind == "geometric":
        r = abs(y)
        return 0j, abs(c_next) * r / (1 - r)

    if kind == "unit":
        tail = y * c_next / (1 - y)
        return tail, 2 * abs(c_next - c_last) / abs(1 - y) ** 2

    def exponent(lo, hi):
        ratio = abs(c[lo - 1]) / max(abs(c[hi - 1]), 1e-300)
        return math.log(ratio) / math.log(hi / lo)

    q = exponent(last // 2, last)
    q_before = exponent(last // 4, last // 2)
    if q <= 1.02:
        raise ConvergenceFailure("outer sum decays like j**-{0:.3f}, too "
                                 "slowly to truncate".format(q))
    tail = c_next * ((last + 1) / (q - 1) + 0.5)
    error = abs(c_next) * (1 + (last + 1) * abs(q - q_before) / (q - 1) ** 2)
    return tail, error


def _classify(y):
    if abs(y - 1) <= _UNIT:
        return "one"
    if abs(abs(y) - 1) <= _UNIT:
        return "unit"
    return "geometric"


def _truncation(indices, ys, kinds, budget):
    # decay exponent of the inner sums, innermost first
    decay = indices[-1] - 1 if kinds[-1] == "one" else indices[-1]
    wanted = [64]
    for n, y, kind in zip(indices[-2::-1], ys[-2::-1], kinds[-2::-1]):
        q = n + decay
        if kind == "one":
            if q <= 1:
                raise DomainError("multiple polylogarithm series diverges")
            wanted.append(4 * budget.tol ** (-1.0 / q))
            decay = q - 1
        elif kind == "unit":
            scale = budget.tol * abs(1 - y) ** 2
            wanted.append(scale ** (-1.0 / (q + 1)))
            decay = q
        else:
            decay = q
    for y, kind in zip(ys, kinds):
        if kind == "geometric" and abs(y) > 0:
            r = abs(y)
            wanted.append(math.log(budget.tol * (1 - r)) / math.log(r))

    terms = int(math.ceil(max(wanted)))
    if terms > budget.max_terms:
        logger.warning("multiple polylogarithm truncated at {0} terms "
                       "({1} wanted)".format(budget.max_terms, terms))
        terms = budget.max_terms
    return terms


def li_multi(indices, args, budget=None):
    """
    The multiple polylogarithm ``Li_{n_1..n_m}(x_1..x_m)`` (see the module
    docstring for the index convention) for depth at most
    :data:`MAX_DEPTH`.

    Writing ``y_j = x_j * ... * x_m``, the sum is evaluated level by level
    from the inside out as a backward recurrence over the summation index.
    The innermost level is exact (Hurwitz zeta, or a polylogarithm minus a
    partial sum on the unit circle); outer levels are truncated with an
    Abel or Euler-Maclaurin tail correction, and the size of that
    correction feeds the reported error.

    :returns: :class:`ValueWithError`
    :raises DomainError: if the series diverges or depth exceeds 3
    """
    budget = _budget(budget)
    indices = MultiIndex(indices)
    xs = [complex(x) for x in args]

    if len(xs) != indices.depth:
        raise ValueError("{0} arguments for a depth {1} index"
                         .format(len(xs), indices.depth))
    if indices.depth > MAX_DEPTH:
        raise DomainError("depth {0} exceeds the supported maximum of {1}"
                          .format(indices.depth, MAX_DEPTH))
    if any(x == 0 for x in xs):
        return ValueWithError(0.0, 0.0)
    if indices.depth == 1:
        return li(indices[0], xs[0], budget)

    ys = [complex(np.prod(xs[j:])) for j in range(len(xs))]
    if any(abs(y) > 1 + _UNIT for y in ys):
        raise DomainError("Li_{0}{1}: a suffix product leaves the unit disc; "
                          "use hyperlog.li_continued".format(
                              tuple(indices), tuple(xs)))
    kinds = [_classify(y) for y in ys]
    if kinds[-1] == "one" and indices[-1] == 1:
        raise DomainError("Li_{0}{1} diverges".format(tuple(indices),
                                                      tuple(xs)))

    terms = _truncation(indices, ys, kinds, budget)
    size = terms + 2
    j = np.arange(1, size, dtype=float)
    growth = 1 + math.log(terms)

    inner, error = _innermost(indices[-1], ys[-1], kinds[-1], size, budget.tol)
    for n, y, kind in zip(indices[-2::-1], ys[-2::-1], kinds[-2::-1]):
        c = inner[1:] / j ** n
        tail, tail_error = _outer_tail(c, y, kind, size)
        outer = np.empty(size, dtype=complex)
        outer[terms] = tail
        outer[terms + 1] = tail / y - c[terms]
        zi = np.array([y * tail])
        backward, _ = signal.lfilter([y], [1, -y], c[terms - 1::-1], zi=zi)
        outer[:terms] = backward[::-1]
        inner = outer
        error = error * growth + tail_error

    value = inner[0]
    error += 4 * _EPS * math.sqrt(terms) * max(1.0, abs(value))
    logger.debug("Li_{0}{1} = {2} +- {3} ({4} terms)".format(
        tuple(indices), tuple(xs), value, error, terms))
    return ValueWithError(value, error)


def bloch_wigner(z):
    """
    The Bloch-Wigner dilogarithm ``D(z) = Im Li_2(z) + arg(1 - z) log|z|``,
    continuous on the plane and zero on the real line.
    """
    z = complex(z)
    if z.imag == 0:
        return 0.0
    if abs(z) > 1:
        return -bloch_wigner(1 / z)
    value = _mp_polylog(2, z).imag + cmath.phase(1 - z) * math.log(abs(z))
    return float(value)


class DomainError(ValueError):
    """Arguments outside the region where the series converges"""
    pass
