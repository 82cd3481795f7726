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
The calligraphic L families: signed sums of (multiple) polylogarithms over
the orbit of ``(a, 1/a)`` under the group G generated by a sign change of
either coordinate and coordinate-wise inversion.

With ``chi`` the character that is -1 on the first sign change,

    L^a_r(x)       = Li_r(xa) - Li_r(-xa)
    L^a_{r:1}(x)   = log|a| L^a_r(x)
    L^a_{r,s}(x,y) = sum over g in G of chi(g) Li_{r,s}((x, y) * (a, 1/a)^g)

and ``L^a_{r,s:1}`` weights each term by ``log|first coordinate|`` of
``(a, 1/a)^g``.
"""

import math
import logging
import itertools
from collections import namedtuple

from . import polylog, hyperlog
from .numerics_core import ValueWithError, NumericalFailure

logger = logging.getLogger("mahler.script_l")

__all__ = ["GroupElementG", "OrbitTerm", "group_elements", "generated_group",
           "orbit", "script_l_r", "script_l_r1", "script_l_rs",
           "script_l_rs1", "OrbitTermFailure"]


class GroupElementG(namedtuple("GroupElementG", ["s1", "s2", "t"])):
    """
    An element of G as three bits: sign change of the first coordinate,
    of the second, and inversion of both. Composition is XOR.
    """

    __slots__ = ()

    def __new__(cls, s1=0, s2=0, t=0):
        for bit in (s1, s2, t):
            if bit not in (0, 1):
                raise ValueError("group element bits must be 0 or 1")
        return super(GroupElementG, cls).__new__(cls, s1, s2, t)

    def __mul__(self, other):
        return GroupElementG(self.s1 ^ other.s1, self.s2 ^ other.s2,
                             self.t ^ other.t)

    @property
    def chi(self):
        return -1 if self.s1 else 1

    def act(self, a):
        """``(a, 1/a)`` transformed by this element."""
        first, second = (1 / a, a) if self.t else (a, 1 / a)
        if self.s1:
            first = -first
        if self.s2:
            second = -second
        return first, second


IDENTITY = GroupElementG()
GENERATORS = (GroupElementG(1, 0, 0), GroupElementG(0, 1, 0),
              GroupElementG(0, 0, 1))


def group_elements():
    """All eight elements, straight from the bit table."""
    return [GroupElementG(*bits) for bits in itertools.product((0, 1),
                                                               repeat=3)]


def generated_group(generators=GENERATORS):
    """The closure of *generators* under composition."""
    found = set([IDENTITY])
    frontier = [IDENTITY]
    while frontier:
        element = frontier.pop()
        for generator in generators:
            product = element * generator
            if product not in found:
                found.add(product)
                frontier.append(product)
    return sorted(found)


class OrbitTerm(namedtuple("OrbitTerm",
                           ["element", "arg_pair", "chi", "log_weight"])):
    """One signed term ``chi * Li_{r,s}(arg_pair)`` of an orbit sum."""
    __slots__ = ()


def orbit(a, x, y, elements=None):
    """
    The :class:`OrbitTerm` list for ``(x, y) * (a, 1/a)^g`` over
    *elements* (default: all of G).
    """
    if not a > 0:
        raise ValueError("a must be positive, got {0!r}".format(a))
    if elements is None:
        elements = group_elements()
    terms = []
    for element in elements:
        first, second = element.act(a)
        terms.append(OrbitTerm(element, (x * first, y * second), element.chi,
                               math.log(abs(first))))
    return terms


def _evaluate(indices, args, tol, branch, element=None):
    try:
        try:
            result = polylog.li_multi(indices, args,
                                      polylog.SeriesBudget(tol=tol))
            if result.abs_error <= tol:
                return result
            logger.debug("series for Li_{0}{1} missed tol ({2}); "
                         "continuing instead".format(indices, args,
                                                     result.abs_error))
        except polylog.DomainError:
            pass
        return hyperlog.li_continued(indices, args, branch)
    except (NumericalFailure, polylog.DomainError) as e:
        if element is None:
            raise
        raise OrbitTermFailure(element, indices, args, e)


def script_l_r(a, r, x, tol=1e-12, branch=hyperlog.DEFAULT):
    """``L^a_r(x) = Li_r(xa) - Li_r(-xa)``."""
    if not a > 0:
        raise ValueError("a must be positive, got {0!r}".format(a))
    x = complex(x)
    return (_evaluate((r, ), (x * a, ), tol, branch) -
            _evaluate((r, ), (-x * a, ), tol, branch))


def script_l_r1(a, r, x, tol=1e-12, branch=hyperlog.DEFAULT):
    """``L^a_{r:1}(x) = log|a| L^a_r(x)``."""
    return script_l_r(a, r, x, tol, branch) * math.log(a)


def _orbit_sum(a, r, s, x, y, weighted, tol, branch):
    total = ValueWithError(0.0, 0.0)
    for term in orbit(a, complex(x), complex(y)):
        factor = term.chi * (term.log_weight if weighted else 1.0)
        if factor == 0:
            continue
        value = _evaluate((r, s), term.arg_pair, tol, branch, term.element)
        total = total + value * factor
    return total


def script_l_rs(a, r, s, x, y, tol=1e-12, branch=hyperlog.DEFAULT):
    """
    ``L^a_{r,s}(x, y)``, the chi-signed sum of ``Li_{r,s}`` over the
    orbit. Each term is summed as a series when that converges to *tol*
    and continued along *branch* otherwise. At a = 1 the orbit
    degenerates and every term is still counted.

    :raises OrbitTermFailure: naming the group element whose term failed
    """
    return _orbit_sum(a, r, s, x, y, False, tol, branch)


def script_l_rs1(a, r, s, x, y, tol=1e-12, branch=hyperlog.DEFAULT):
    """``L^a_{r,s:1}(x, y)``, with each term weighted by its log factor."""
    return _orbit_sum(a, r, s, x, y, True, tol, branch)


class OrbitTermFailure(NumericalFailure):
    """One term of an orbit sum could not be evaluated"""

    def __init__(self, element, indices, args, cause):
        super(OrbitTermFailure, self).__init__(
            "orbit term {0} (Li_{1}{2}) failed: {3}".format(
                tuple(element), tuple(indices), tuple(args), cause))
        self.element = element
        self.cause = cause
