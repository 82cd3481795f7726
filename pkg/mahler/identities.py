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
Identity suites: each function in ``__all__`` returns a list of
:class:`~mahler.formulas.IdentityCase` objects, and is loaded by
:class:`~mahler.loadable_manager.LoadableManager` under the shorthand
configured in ``suites`` (by default ``identities.<function>``).
"""

import math
import logging

from . import formulas, polylog, script_l, hyperlog
from .formulas import IdentityCase, CLOSED_FORMS
from .numerics_core import ValueWithError, integrate_1d
from .dirichlet import (CharacterSpec, MultiLSpec, l_single, l_multi,
                        double_sum_S1, double_sum_S2)

logger = logging.getLogger("mahler.identities")

__all__ = ["coro15", "coro15_arctan", "z5", "li32", "rearrangement",
           "l_forms", "table_a1", "prop1", "medium", "f2_n0_elementary",
           "maillot_integrand", "inversion", "falsity", "audit"]

_PI = math.pi
_CHI = CharacterSpec.CHI_MINUS4
_TRIVIAL = CharacterSpec.TRIVIAL
_SQUARE = CharacterSpec.PRINCIPAL_MOD4


def _constant(value):
    return lambda param: value


def _catalan():
    return l_single(_CHI, 2).real


def _zeta(k):
    return polylog.zeta(k)


def _even_inner():
    # sum over 0 < m < n with m even of chi(n) / (m n^3)
    return (l_multi(MultiLSpec((_TRIVIAL, _CHI), (1, 3))) -
            l_multi(MultiLSpec((_SQUARE, _CHI), (1, 3)))).real


def coro15():
    """The two formulas for the first kind with two auxiliary variables."""
    grid = tuple(k / 10.0 for k in range(1, 10)) + (1.0, 2.0, 5.0, 10.0)
    return [IdentityCase("coro15",
                         lambda a: _PI ** 2 * formulas.f1_n2(a),
                         lambda a: _PI ** 2 * formulas.f1_n2_alt(a),
                         "a in (0, oo)", grid, 1e-8)]


def coro15_arctan():
    return [IdentityCase("coro15_arctan", formulas.coro15_arctan_lhs,
                         formulas.coro15_arctan_rhs, "0 < a <= 1",
                         (0.25, 0.5, 1.0), 1e-9)]


def _z5_lhs(param):
    return (4 * _PI ** 2 * script_l.script_l_r(1.0, 3, 1) +
            4 * script_l.script_l_rs(1.0, 3, 2, 1, 1))


def z5():
    """``4 pi^2 L^1_3(1) + 4 L^1_{3,2}(1, 1) = 93 zeta(5)``."""
    return [IdentityCase("z5", _z5_lhs, lambda p: 93 * _zeta(5), tol=1e-8)]


def _li32_series(x, y):
    return lambda param: polylog.li_multi((3, 2), (x, y))


def _li32_alternating(param):
    signs = [(1, 1, 1), (-1, 1, -1), (1, -1, 1), (-1, -1, -1)]
    return sum(sign * formulas.li32_reduction(x, y) for x, y, sign in signs)


def li32():
    """The reduction of ``Li_{3,2}`` at signs to single zeta values."""
    cases = []
    for x in (1, -1):
        for y in (1, -1):
            reduced = formulas.li32_reduction(x, y)
            cases.append(IdentityCase("li32_{0:+d}_{1:+d}".format(x, y),
                                      _constant(reduced),
                                      _li32_series(x, y), tol=1e-9))
    combined = -21.0 / 4 * _zeta(2) * _zeta(3) + 93.0 / 8 * _zeta(5)
    cases.append(IdentityCase("li32_alternating", _li32_alternating,
                              _constant(combined), tol=1e-12))
    return cases


def _rearranged(param):
    return (7.0 / 4 * _zeta(3) * l_single(_CHI, 1).real -
            1.5 * _zeta(2) * _catalan() +
            2 * math.log(2) * l_single(_CHI, 3).real + 2 * _even_inner())


def rearrangement():
    """The alternating double sum of the fifth table row, rearranged."""
    return [IdentityCase("rearrangement", lambda p: double_sum_S2(),
                         _rearranged, tol=1e-8)]


def _l1_lhs(param):
    return 7 * _PI * _zeta(3) + 4 * double_sum_S1().real


def _l1_rhs(param):
    difference = (l_multi(MultiLSpec((_CHI, _TRIVIAL), (2, 2))) -
                  l_multi(MultiLSpec((_CHI, _SQUARE), (2, 2))))
    return 7 * _PI * _zeta(3) + 16 * difference.real


def _l2_lhs(param):
    return 2 * _PI ** 2 * _catalan() + 8 * double_sum_S2().real


def _l2_rhs(param):
    return (3.5 * _PI * _zeta(3) +
            16 * math.log(2) * l_single(_CHI, 3).real + 16 * _even_inner())


def l_forms():
    """The third and fifth table values as multiple L-values."""
    return [IdentityCase("l1", _l1_lhs, _l1_rhs, tol=1e-8),
            IdentityCase("l2", _l2_lhs, _l2_rhs, tol=1e-8)]


def table_values():
    """The a = 1 table: family label to expected measure."""
    zeta3 = _zeta(3)
    return [
        ("first_kind_n1", 2 * _catalan() / _PI),
        ("first_kind_n2", 7 * zeta3 / _PI ** 2),
        ("first_kind_n3",
         (7 * _PI * zeta3 + 4 * double_sum_S1().real) / _PI ** 3),
        ("second_kind_n0", 3.5 * zeta3 / _PI ** 2),
        ("second_kind_n1",
         (2 * _PI ** 2 * _catalan() + 8 * double_sum_S2().real) / _PI ** 3),
        ("second_kind_n2", 93 * _zeta(5) / _PI ** 4),
        ("maillot_variant",
         (3.5 * zeta3 + _PI ** 2 / 2 * math.log(2)) / _PI ** 2),
    ]


def _closed_at_one(label):
    if label == "maillot_variant":
        return lambda param: formulas.maillot_variant()
    return lambda param: CLOSED_FORMS[label](1.0)


def table_a1():
    """The closed forms at a = 1 against the table of results."""
    return [IdentityCase("table_a1_" + label, _closed_at_one(label),
                         _constant(value), tol=1e-8)
            for label, value in table_values()]


def _prop1_lhs(a):
    # i times the integral of L_2^{a|tan(t/2)|}(i) over the circle, where
    # L_2^b(i) = 2i Im Li_2(ib); the integrand is even about pi
    def integrand(theta):
        b = a * abs(math.tan(theta / 2))
        return hyperlog.li_continued((2, ), (1j * b, )).imag

    half = integrate_1d(integrand, (0, _PI), 1e-11, singularities=[_PI])
    return -4 * half


def _prop1_rhs(a):
    value = (-8 * script_l.script_l_r(a, 3, 1) +
             4 * script_l.script_l_r1(a, 2, 1))
    return ValueWithError(value.real, value.abs_error)


def prop1():
    return [IdentityCase("prop1", _prop1_lhs, _prop1_rhs,
                         "a in {0.5, 1, 2}", (0.5, 1.0, 2.0), 1e-8)]


def _medium_lhs(n, z):
    def lhs(a):
        def integrand(x):
            value = (polylog.li(n, x * z).value -
                     polylog.li(n, -x * z).value)
            return value * (a / (x * x + a * a) + a / (a * a * x * x + 1))
        return integrate_1d(integrand, (0, 1), 1e-11)
    return lhs


def _medium_rhs(n, z):
    return lambda a: 0.5j * script_l.script_l_rs(a, n, 1, 1j * z, 1j)


def medium():
    return [IdentityCase("medium_n{0}".format(n), _medium_lhs(n, z),
                         _medium_rhs(n, z), "a in {0.5, 1}", (0.5, 1.0),
                         1e-8)
            for n, z in ((2, 1j), (3, 1))]


def f2_n0_elementary():
    return [IdentityCase("f2_n0_elementary", formulas.f2_n0,
                         formulas.f2_n0_elementary, "0 < a <= 1",
                         (0.25, 0.5, 1.0), 1e-9)]


def _pointwise_lhs(theta):
    alpha = -1j * math.tan(theta / 2)
    return _PI * formulas.maillot_special(alpha)


def maillot_integrand():
    """The variant of the Maillot polynomial as a single integral."""
    return [IdentityCase("maillot_integrand",
                         lambda p: formulas.maillot_variant_integral(),
                         lambda p: _PI ** 2 * formulas.maillot_variant(),
                         tol=1e-8),
            IdentityCase("maillot_pointwise", _pointwise_lhs,
                         formulas.maillot_variant_pointwise,
                         "0 < theta < pi", (0.5, 1.0, 2.0), 1e-12)]


def _inverted(form):
    return lambda a: math.log(a) + form(1.0 / a)


def inversion():
    """``m(a) = log a + m(1/a)`` for every family closed form."""
    return [IdentityCase("inversion_" + label, form, _inverted(form),
                         "a in {2, 5}", (2.0, 5.0), 1e-8)
            for label, form in sorted(CLOSED_FORMS.items())]


def _branch_gap(sign):
    def lhs(x):
        target, below, above = formulas.falsity_first_order(x)
        return (below if sign < 0 else above) - target
    return lhs


def falsity():
    """
    ``Li_1(x) - Li_1(-x)`` misses ``log((x+1)/(x-1))`` by ``-+ i pi``
    below and above the cut, so no branch of ``2 L^x_3(1)`` can be the
    second kind measure for x > 1.
    """
    return [IdentityCase("falsity_below", _branch_gap(-1),
                         _constant(-1j * _PI), "x > 1", (2.0, 3.0), 1e-10),
            IdentityCase("falsity_above", _branch_gap(1),
                         _constant(1j * _PI), "x > 1", (2.0, 3.0), 1e-10)]


def _weight_mismatches(param):
    return sum(1 for form in CLOSED_FORMS.values()
               if form.weight != form.variable_count)


def _continuity(param):
    return max(form.continuity_gap() for form in CLOSED_FORMS.values())


def audit():
    """Homogeneity weights and continuity of the piecewise forms at 1."""
    return [IdentityCase("weights", _weight_mismatches, _constant(0), tol=0),
            IdentityCase("continuity", _continuity, _constant(0.0),
                         tol=1e-9)]


SUITES = tuple(__all__)


def all_cases():
    """Every case of every suite, in suite order."""
    cases = []
    for name in SUITES:
        cases.extend(globals()[name]())
    return cases
