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
Characters modulo 4, single and double Dirichlet L-series, and the two
double sums that turn up in the a = 1 values of the polynomial families.

Multiple L-values follow the polylogarithm index convention,

    L(chi_1, ..., chi_m; n_1, ..., n_m) =
        sum over 0 < k_1 < ... < k_m of prod_j chi_j(k_j) / k_j**n_j
"""

import enum
import math
import logging
from collections import namedtuple

import numpy as np
from scipy import special

from . import polylog
from .numerics_core import ValueWithError, accelerate_alternating

logger = logging.getLogger("mahler.dirichlet")

__all__ = ["CharacterSpec", "MultiLSpec", "l_single", "l_multi",
           "double_sum_S1", "double_sum_S2", "MAX_TERMS"]

MAX_TERMS = 2 ** 20
_EPS = np.finfo(float).eps


class CharacterSpec(enum.Enum):
    """
    The three characters in play: the trivial character on all positive
    integers, the principal character modulo 4, and the odd character of
    conductor 4.
    """

    TRIVIAL = "trivial"
    PRINCIPAL_MOD4 = "principal_mod4"
    CHI_MINUS4 = "chi_minus4"

    def values(self, k):
        """The character at the integers *k* (scalar or array)."""
        k = np.asarray(k)
        if self is CharacterSpec.TRIVIAL:
            return np.ones(k.shape)
        odd = (k % 2 == 1).astype(float)
        if self is CharacterSpec.PRINCIPAL_MOD4:
            return odd
        return odd * np.where(k % 4 == 1, 1.0, -1.0)

    def __call__(self, n):
        return float(self.values(n))


class MultiLSpec(namedtuple("MultiLSpec", ["characters", "exponents"])):
    """Characters and exponents of a multiple L-value."""

    __slots__ = ()

    def __new__(cls, characters, exponents):
        characters = tuple(CharacterSpec(c) for c in characters)
        exponents = tuple(int(n) for n in exponents)
        if len(characters) != len(exponents) or not exponents:
            raise ValueError("one exponent per character is needed")
        if min(exponents) < 1:
            raise ValueError("exponents must be positive")
        return super(MultiLSpec, cls).__new__(cls, characters, exponents)

    @property
    def depth(self):
        return len(self.exponents)

    @property
    def convergent(self):
        return self.exponents[-1] > 1


def l_single(chi, s):
    """
    ``L(chi, s)`` for an integer s >= 1.

    The odd character is summed as an accelerated alternating series
    (which also covers s = 1); the others reduce to zeta values.

    :raises polylog.DomainError: at s = 1 for the even characters
    """
    chi = CharacterSpec(chi)
    if int(s) != s or s < 1:
        raise polylog.DomainError("L-series needs a positive integer "
                                  "exponent, got {0!r}".format(s))
    s = int(s)

    if chi is CharacterSpec.CHI_MINUS4:
        return accelerate_alternating(lambda j: (-1) ** j / (2 * j + 1.0) ** s)
    if s == 1:
        raise polylog.DomainError("L({0}, 1) diverges".format(chi.value))

    value = polylog.zeta(s)
    if chi is CharacterSpec.PRINCIPAL_MOD4:
        value *= 1 - 2.0 ** -s
    return ValueWithError(value, 4 * _EPS * value)


def _partial_outer(chi, s, terms):
    k = np.arange(1, terms + 1, dtype=float)
    return np.sum(chi.values(k) / k ** s)


def l_multi(spec, truncate=None, max_terms=MAX_TERMS):
    """
    A multiple L-value of depth one or two.

    The inner sum is carried as a running prefix sum, so the whole
    truncated lattice sum costs one pass over ``k_2 <= N``. Beyond N the
    inner sum is frozen at its value at N and the outer remainder is added
    from the exact single L-value; the neglected growth of the inner sum
    is bounded in the error.

    With *truncate* the finite sum over ``k_m <= truncate`` is returned
    instead, with no tail.

    :raises polylog.DomainError: for a divergent spec or depth above two
    """
    if not isinstance(spec, MultiLSpec):
        spec = MultiLSpec(*spec)
    if not spec.convergent:
        raise polylog.DomainError("the multiple L-series {0} diverges"
                                  .format(spec))
    if spec.depth == 1:
        if truncate is not None:
            value = _partial_outer(spec.characters[0], spec.exponents[0],
                                   int(truncate))
            return ValueWithError(value, 0.0)
        return l_single(spec.characters[0], spec.exponents[0])
    if spec.depth > 2:
        raise polylog.DomainError("multiple L-values above depth two are "
                                  "not supported")

    (chi1, chi2), (n1, n2) = spec.characters, spec.exponents
    terms = int(truncate) if truncate is not None else max_terms
    if terms < 1:
        return ValueWithError(0.0, 0.0)

    k = np.arange(1, terms + 1, dtype=float)
    inner = chi1.values(k) / k ** n1
    prefix = np.concatenate([[0.0], np.cumsum(inner)[:-1]])
    outer = chi2.values(k) / k ** n2
    value = np.sum(outer * prefix)
    error = 4 * _EPS * math.sqrt(terms) * max(1.0, abs(value))

    if truncate is None:
        frozen = prefix[-1] + inner[-1]
        remainder = l_single(chi2, n2).value.real - np.sum(outer)
        value += frozen * remainder
        if n1 == 1:
            growth = 1.0 / ((n2 - 1) ** 2 * terms ** (n2 - 1))
        else:
            growth = 1.0 / ((n1 - 1) * (n2 - 1) * terms ** (n1 + n2 - 2))
        error += growth + abs(frozen) * 8 * _EPS

    logger.debug("L{0} = {1} +- {2} ({3} terms)".format(spec, value, error,
                                                        terms))
    return ValueWithError(value, error)


def double_sum_S1():
    """
    ``sum over 0 <= j < k of (-1)**j / ((2j + 1)**2 k**2)``.

    The inner sum over k is the Hurwitz zeta value ``zeta(2, j + 1)`` and
    the outer sum is alternating.
    """
    return accelerate_alternating(
        lambda j: (-1) ** j * special.zeta(2, j + 1) / (2 * j + 1.0) ** 2)


def double_sum_S2(terms=100000):
    """
    ``sum over 0 <= j < k of (-1)**(j + k + 1) / ((2j + 1)**3 k)``.

    The inner alternating sum over k > j is ``(-1)**j`` times
    ``(psi((j + 2)/2) - psi((j + 1)/2)) / 2``, which leaves a sum of
    positive terms decaying like ``j**-4``.
    """
    j = np.arange(terms, dtype=float)
    inner = 0.5 * (special.digamma((j + 2) / 2) - special.digamma((j + 1) / 2))
    value = np.sum(inner / (2 * j + 1) ** 3)
    tail = 1.0 / (24.0 * terms ** 3)
    return ValueWithError(value, tail + 4 * _EPS * math.sqrt(terms) * value)
