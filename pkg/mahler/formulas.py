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
Closed forms for the Mahler measures of the polynomial families.

Every right hand side is assembled from :mod:`mahler.script_l`,
:mod:`mahler.polylog` and :mod:`mahler.dirichlet` values; nothing here is
a stored decimal. Each family measure is a :class:`PiecewiseClosedForm`:
``F`` on (0, 1] and ``G`` on [1, oo), which for the families with an
explicit inversion splitting is ``log a`` plus ``F(1/a)``.

The measures are, with ``L`` the calligraphic sums of
:mod:`mahler.script_l` (all at argument 1 or i):

==================  ====================================================
``first_kind_n0``   ``log+ a``
``first_kind_n1``   ``-i L^a_2(i) / pi``
``first_kind_n2``   ``(4 L^a_3(1) - 2 L^a_{2:1}(1)) / pi^2``
``first_kind_n3``   ``(4 pi L^a_3(1) - 2 pi L^a_{2:1}(1)
                    - 2i (L^a_{2,2}(i, 1) + L^a_{2,1:1}(i, 1))) / pi^3``
``second_kind_n0``  ``2 L^a_3(1) / pi^2``
``second_kind_n1``  ``(-i pi^2 L^a_2(i) + 2i L^a_{3,1}(i, i)) / pi^3``
``second_kind_n2``  ``(4 pi^2 L^a_3(1) - 2 pi^2 L^a_{2:1}(1)
                    + 4 (L^a_{3,2}(1, 1) + L^a_{3,1:1}(1, 1))) / pi^4``
==================  ====================================================
"""

import math
import cmath
import logging

import numpy as np

from . import polylog, script_l, hyperlog
from .numerics_core import ValueWithError, integrate_1d
from .mahler_numeric import FamilySpec

logger = logging.getLogger("mahler.formulas")

__all__ = ["PiecewiseClosedForm", "IdentityCase", "CLOSED_FORMS",
           "f1_n0", "f1_n1", "f1_n2", "f1_n2_alt", "f1_n3",
           "f2_n0", "f2_n1", "f2_n2", "f2_n0_elementary",
           "maillot_closed", "maillot_special", "maillot_variant",
           "maillot_variant_integral", "maillot_variant_pointwise",
           "li32_reduction", "coro15_arctan_lhs", "coro15_arctan_rhs",
           "falsity_first_order", "closed_form",
           "identity_registry"]

_PI = math.pi


class PiecewiseClosedForm(object):
    """
    A family measure as a function of a > 0: *F* on (0, 1], *G* on
    [1, oo). *weight* is the homogeneity weight of the formula, which
    should equal the variable count of *family* (a ``(kind, n)`` pair).
    """

    def __init__(self, F, G, label, weight, family):
        self.F = F
        self.G = G
        self.label = label
        self.weight = weight
        self.family = family

    def __call__(self, a):
        if not a > 0:
            raise ValueError("a must be positive, got {0!r}".format(a))
        return self.F(a) if a <= 1 else self.G(a)

    def __repr__(self):
        return "<mahler.PiecewiseClosedForm {0} (weight {1})>".format(
            self.label, self.weight)

    @property
    def variable_count(self):
        kind, n = self.family
        return FamilySpec(kind, n).variable_count

    def continuity_gap(self):
        return abs(self.F(1.0) - self.G(1.0))


class IdentityCase(object):
    """
    One verifiable identity: *lhs_fn* and *rhs_fn* map a parameter (None
    for parameter-free cases) to :class:`~mahler.numerics_core.ValueWithError`.
    *params* lists the parameters to check at.
    """

    def __init__(self, id, lhs_fn, rhs_fn, param_domain="none",
                 params=(None, ), tol=1e-9):
        self.id = id
        self.lhs_fn = lhs_fn
        self.rhs_fn = rhs_fn
        self.param_domain = param_domain
        self.params = tuple(params)
        self.tol = tol

    def __repr__(self):
        return "<mahler.IdentityCase {0}>".format(self.id)

    def residual(self, param=None):
        return abs(_as_value(self.lhs_fn(param)).value -
                   _as_value(self.rhs_fn(param)).value)


def _as_value(x):
    if isinstance(x, ValueWithError):
        return x
    return ValueWithError(x, 0.0)


def _inverted(form):
    def inverted(a):
        return math.log(a) + form(1.0 / a)
    return inverted


def _real(value):
    return _as_value(value).real


def _l3(a):
    return script_l.script_l_r(a, 3, 1)


def _l21(a):
    return script_l.script_l_r1(a, 2, 1)


def _l2i(a):
    return script_l.script_l_r(a, 2, 1j)


# first kind


def f1_n0(a):
    """``m(1 + a y) = log+ a``."""
    if not a > 0:
        raise ValueError("a must be positive, got {0!r}".format(a))
    return max(0.0, math.log(a))


def _f1_n1(a):
    return _real(-1j * _l2i(a)) / _PI


def f1_n1(a):
    """``m((1 + x) + a (1 - x) y)``."""
    return _first_n1(a)


def _f1_n2(a):
    return _real(4 * _l3(a) - 2 * _l21(a)) / _PI ** 2


def f1_n2(a):
    """``m((1 + w)(1 + x) + a (1 - w)(1 - x) y)``."""
    return _first_n2(a)


def f1_n2_alt(a):
    """
    The same measure as :func:`f1_n2` from the other integration order,
    ``(-i pi L^a_2(i) - L^a_{2,1}(1, i)) / pi^2``, continued directly for
    every a.
    """
    value = -1j * _PI * _l2i(a) - script_l.script_l_rs(a, 2, 1, 1, 1j)
    return _real(value) / _PI ** 2


def f1_n3(a):
    """``m((1 + v)(1 + w)(1 + x) + a (1 - v)(1 - w)(1 - x) y)``."""
    mixed = (script_l.script_l_rs(a, 2, 2, 1j, 1) +
             script_l.script_l_rs1(a, 2, 1, 1j, 1))
    value = 4 * _PI * _l3(a) - 2 * _PI * _l21(a) - 2j * mixed
    return _real(value) / _PI ** 3


# second kind


def _f2_n0(a):
    return _real(2 * _l3(a)) / _PI ** 2


def f2_n0(a):
    """``m(1 + x + a y + a z)``."""
    return _second_n0(a)


def f2_n1(a):
    """``m((1 + w)(1 + x) + a (1 - w)(y + z))``."""
    value = (-1j * _PI ** 2 * _l2i(a) +
             2j * script_l.script_l_rs(a, 3, 1, 1j, 1j))
    return _real(value) / _PI ** 3


def f2_n2(a):
    """``m((1 + v)(1 + w)(1 + x) + a (1 - v)(1 - w)(y + z))``."""
    depth_two = (script_l.script_l_rs(a, 3, 2, 1, 1) +
                 script_l.script_l_rs1(a, 3, 1, 1, 1))
    value = 4 * _PI ** 2 * _l3(a) - 2 * _PI ** 2 * _l21(a) + 4 * depth_two
    return _real(value) / _PI ** 4


def f2_n0_elementary(a, tol=1e-11):
    """
    :func:`f2_n0` for 0 < a <= 1 as the single integral
    ``-2/pi^2 int_0^pi t log|1 + a e^{it}| dt``.
    """
    if not 0 < a <= 1:
        raise ValueError("the elementary form needs 0 < a <= 1")

    def integrand(t):
        return t * math.log(abs(1 + a * cmath.exp(1j * t)))

    result = integrate_1d(integrand, (0, _PI), tol, singularities=[_PI])
    return -2 * result.real / _PI ** 2


_first_n0 = PiecewiseClosedForm(f1_n0, f1_n0, "first_kind_n0", 1,
                                ("first_kind", 0))
_first_n1 = PiecewiseClosedForm(_f1_n1, _inverted(_f1_n1), "first_kind_n1",
                                2, ("first_kind", 1))
_first_n2 = PiecewiseClosedForm(_f1_n2, _inverted(_f1_n2), "first_kind_n2",
                                3, ("first_kind", 2))
_first_n3 = PiecewiseClosedForm(f1_n3, f1_n3, "first_kind_n3", 4,
                                ("first_kind", 3))
_second_n0 = PiecewiseClosedForm(_f2_n0, _inverted(_f2_n0),
                                 "second_kind_n0", 3, ("second_kind", 0))
_second_n1 = PiecewiseClosedForm(f2_n1, f2_n1, "second_kind_n1", 4,
                                 ("second_kind", 1))
_second_n2 = PiecewiseClosedForm(f2_n2, f2_n2, "second_kind_n2", 5,
                                 ("second_kind", 2))

CLOSED_FORMS = dict((form.label, form) for form in
                    (_first_n0, _first_n1, _first_n2, _first_n3,
                     _second_n0, _second_n1, _second_n2))


# Maillot


def maillot_closed(a, b, c):
    """
    ``m(a + b x + c y)`` for positive a, b, c. When a, b and c are the
    sides of a proper triangle with opposite angles alpha, beta and gamma,

        pi m = alpha log a + beta log b + gamma log c + D(a/b e^{i gamma})

    and otherwise ``m = log max(a, b, c)``.
    """
    a, b, c = float(a), float(b), float(c)
    if min(a, b, c) <= 0:
        raise ValueError("sides must be positive")
    if a >= b + c or b >= a + c or c >= a + b:
        return math.log(max(a, b, c))

    def angle(opposite, left, right):
        cosine = (left ** 2 + right ** 2 - opposite ** 2) / (2 * left * right)
        return math.acos(min(1.0, max(-1.0, cosine)))

    alpha, beta, gamma = angle(a, b, c), angle(b, a, c), angle(c, a, b)
    value = (alpha * math.log(a) + beta * math.log(b) + gamma * math.log(c) +
             polylog.bloch_wigner(a / b * cmath.exp(1j * gamma)))
    return value / _PI


def maillot_special(alpha):
    """
    ``m(1 + alpha x + (1 - alpha) y)`` from the triangle with vertices 0,
    1 and alpha; the dilogarithm is taken at alpha or its conjugate,
    whichever lies in the closed upper half plane.
    """
    alpha = complex(alpha)
    if alpha in (0, 1):
        raise ValueError("alpha must avoid 0 and 1")
    if alpha.imag == 0:
        return maillot_closed(1, abs(alpha), abs(1 - alpha))
    upper = alpha if alpha.imag >= 0 else alpha.conjugate()
    value = (abs(cmath.phase(alpha)) * math.log(abs(1 - alpha)) +
             abs(cmath.phase(1 - alpha)) * math.log(abs(alpha)) +
             polylog.bloch_wigner(upper))
    return value / _PI


def maillot_variant():
    """
    ``m((1 + w)(1 + y) + (1 - w)(x - y))``, which is
    ``(2 L^1_3(1) + pi^2/2 log 2) / pi^2``.
    """
    return (_real(2 * _l3(1.0)) + _PI ** 2 / 2 * math.log(2)) / _PI ** 2


def maillot_variant_pointwise(theta):
    """
    ``pi m(1 + alpha x + (1 - alpha) y)`` at ``alpha = -i tan(theta/2)``,
    written with the right angle of that triangle made explicit.
    """
    half = theta / 2
    return (-_PI / 2 * math.log(abs(math.cos(half))) +
            abs(half) * math.log(abs(math.tan(half))) +
            polylog.bloch_wigner(1j * abs(math.tan(half))))


def maillot_variant_integral(tol=1e-10):
    """
    ``pi^2`` times :func:`maillot_variant`, as the integral over theta of
    ``-(pi/2) log|cos(theta/2)| + Im Li_2(i |tan(theta/2)|)``.
    """
    def integrand(theta):
        half = theta / 2
        value = hyperlog.li_continued(
            (2, ), (1j * abs(math.tan(half)), )).imag
        return -_PI / 2 * math.log(abs(math.cos(half))) + value

    # even in theta
    return integrate_1d(integrand, (0, _PI), tol, singularities=[_PI]).real


# identities behind the table


def li32_reduction(x, y):
    """
    ``Li_{3,2}(x, y)`` for x, y = +-1 as the polynomial in single
    polylogarithm values

        -Li_5(xy)/2 + Li_3(x) Li_2(y) + 3 Li_5(x) + 2 Li_5(y)
        - Li_2(xy) (Li_3(x) + 2 Li_3(y))
    """
    if x not in (1, -1) or y not in (1, -1):
        raise ValueError("li32_reduction needs x, y in {1, -1}")

    def li(k, sign):
        return polylog.zeta(k) if sign == 1 else polylog.li_at_minus_one(k)

    return (-li(5, x * y) / 2 + li(3, x) * li(2, y) + 3 * li(5, x) +
            2 * li(5, y) - li(2, x * y) * (li(3, x) + 2 * li(3, y)))


def _odd_series(a, power):
    # sum over odd n of a**n / n**power
    return (polylog.li(power, a).real - polylog.li(power, -a).real) / 2


def coro15_arctan_lhs(a):
    """``8 sum_odd a^n/n^3 - 4 log a sum_odd a^n/n^2`` for 0 < a <= 1."""
    if not 0 < a <= 1:
        raise ValueError("the arctan form needs 0 < a <= 1")
    return 8 * _odd_series(a, 3) - 4 * math.log(a) * _odd_series(a, 2)


def coro15_arctan_rhs(a, tol=1e-12):
    """
    ``2 pi sum_odd (-1)^((n-1)/2) a^n/n^2`` plus
    ``4 int_0^1 arctan(s)/s (pi/2 - arctan(s/a) - arctan(a s)) ds``.
    """
    if not 0 < a <= 1:
        raise ValueError("the arctan form needs 0 < a <= 1")

    def integrand(s):
        return (np.arctan(s) / s *
                (_PI / 2 - np.arctan(s / a) - np.arctan(a * s)))

    inverse_tangent = polylog.li(2, 1j * a).value.imag
    integral = integrate_1d(integrand, (0, 1), tol).real
    return 2 * _PI * inverse_tangent + 4 * integral


def falsity_first_order(x):
    """
    Whether ``2 L^x_3(1)`` continued across the cut at x > 1 could be the
    second kind measure, differentiated twice: the real value
    ``log((x + 1)/(x - 1))`` against ``Li_1(x) - Li_1(-x)`` continued
    below and above the cut.

    :returns: ``(real value, below, above)``
    """
    if not x > 1:
        raise ValueError("the falsity check needs x > 1")
    target = math.log((x + 1) / (x - 1))
    values = [(hyperlog.li_continued((1, ), (x, ), branch) -
               hyperlog.li_continued((1, ), (-x, ))).value
              for branch in (hyperlog.LOWER_SEMICIRCLE,
                             hyperlog.UPPER_SEMICIRCLE)]
    return (target, ) + tuple(values)


def closed_form(family):
    """The closed form of the measure of a :class:`FamilySpec`."""
    if family.kind == "maillot_variant":
        return maillot_variant()
    if family.kind == "maillot_general":
        return maillot_closed(family.a, family.b, family.c)
    if family.kind == "maillot_special":
        return maillot_special(family.alpha)
    return CLOSED_FORMS[family.label](family.a)


def identity_registry():
    """Every case of every suite in :mod:`mahler.identities`."""
    from . import identities
    return identities.all_cases()
