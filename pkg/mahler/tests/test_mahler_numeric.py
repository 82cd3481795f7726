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
Tests for mahler.mahler_numeric
"""

import math

import numpy as np
import pytest

from ..numerics_core import QuadratureConfig, ConvergenceFailure
from ..dirichlet import double_sum_S1
from ..mahler_numeric import (FamilySpec, ReducedIntegrand, jensen_reduce,
                              integrate_reduced, mahler_quadrature,
                              mahler_monte_carlo, param_transform,
                              ReductionError, _circle_kinks)

_catalan = 0.9159655941772190
_zeta3 = 1.2020569031595943

loose = QuadratureConfig(target_tol=1e-3)


def log_plus(a):
    return max(0.0, math.log(a))


class TestFamilySpec(object):
    def test_variable_counts(self):
        assert FamilySpec("first_kind", 0).variable_count == 1
        assert FamilySpec("first_kind", 3).dimension == 3
        assert FamilySpec("second_kind", 2).variable_count == 5
        assert FamilySpec("second_kind", 2).dimension == 4
        assert FamilySpec("maillot_variant").dimension == 2
        assert FamilySpec("maillot_general", a=1, b=2, c=3).dimension == 1

    @pytest.mark.parametrize("kind,n", [("first_kind", 4),
                                        ("second_kind", 3),
                                        ("maillot_variant", 1),
                                        ("first_kind", -1),
                                        ("third_kind", 0)])
    def test_out_of_range(self, kind, n):
        with pytest.raises(ReductionError):
            FamilySpec(kind, n)

    def test_parameters(self):
        with pytest.raises(ReductionError):
            FamilySpec("first_kind", 1, a=0)
        with pytest.raises(ReductionError):
            FamilySpec("maillot_general", a=1, b=-1, c=1)
        with pytest.raises(ReductionError):
            FamilySpec("maillot_special", alpha=1)

        special = FamilySpec("maillot_special", alpha=3 + 4j)
        assert special.a == 5.0
        assert FamilySpec("first_kind", 2, a=3).with_a(0.5).a == 0.5
        assert FamilySpec("second_kind", 1).label == "second_kind_n1"

    def test_not_a_family(self):
        with pytest.raises(ReductionError):
            jensen_reduce(("first_kind", 1, 1.0))


class TestJensenReduce(object):
    @pytest.mark.parametrize("a,expect", [(0.5, 0.0), (1.0, 0.0),
                                          (2.0, math.log(2))])
    def test_constant(self, a, expect):
        family = FamilySpec("first_kind", 0, a=a)
        reduced = jensen_reduce(family)
        assert reduced.dimension == 0
        assert reduced.constant == pytest.approx(expect, abs=1e-15)
        assert mahler_quadrature(family).real == pytest.approx(expect,
                                                               abs=1e-15)

    def test_first_kind_point(self):
        reduced = jensen_reduce(FamilySpec("first_kind", 1, a=3))
        value = reduced.evaluate(np.array([math.pi / 2]))
        assert value == pytest.approx(math.log(3 * math.sqrt(2)), abs=1e-14)

    def test_maillot_variant_point(self):
        reduced = jensen_reduce(FamilySpec("maillot_variant"))
        w, y = 2.0, 0.7
        theta = np.array([w, y])
        first = abs(1 + np.exp(1j * w) + 2 * np.exp(1j * (w + y)))
        second = abs(1 - np.exp(1j * w))
        assert reduced.evaluate(theta) == \
            pytest.approx(math.log(max(first, second)), abs=1e-14)

    def test_second_kind_point(self):
        reduced = jensen_reduce(FamilySpec("second_kind", 1, a=0.8))
        w, x, y = 1.1, 2.3, 0.4
        a0 = (1 + np.exp(1j * w)) * (1 + np.exp(1j * x))
        b = 0.8 * (1 - np.exp(1j * w))
        expect = math.log(max(abs(a0 + b * np.exp(1j * y)), abs(b)))
        assert reduced.evaluate(np.array([w, x, y])) == \
            pytest.approx(expect, abs=1e-14)

    def test_kinks_balance_the_max(self):
        reduced = jensen_reduce(FamilySpec("second_kind", 0, a=1.0))
        prefix = np.array([[0.3], [1.2], [2.9]])
        kinks = reduced.kinks(prefix)
        for row, points in zip(prefix, kinks):
            for phi in points[np.isfinite(points)]:
                u, v = reduced.arguments(np.array([row[0], phi]))
                assert u == pytest.approx(v, abs=1e-12)

    def test_circle_kinks(self):
        found = _circle_kinks(np.complex128(1), np.complex128(1j), 1.0)
        assert np.all(np.isfinite(found))
        assert np.abs(1 + 1j * np.exp(1j * found)) == \
            pytest.approx([1.0, 1.0], abs=1e-14)
        assert np.all(np.isnan(_circle_kinks(np.complex128(1),
                                             np.complex128(0.1), 3.0)))


class TestQuadrature(object):
    def test_first_kind_n1(self):
        result = mahler_quadrature(FamilySpec("first_kind", 1), loose)
        assert result.real == pytest.approx(2 * _catalan / math.pi,
                                            abs=1e-9)
        assert result.real == pytest.approx(0.5831218080, abs=1e-10)

    def test_first_kind_n2(self):
        result = mahler_quadrature(FamilySpec("first_kind", 2), loose)
        assert result.real == pytest.approx(0.8525565059, abs=1e-6)
        assert result.real == pytest.approx(7 * _zeta3 / math.pi ** 2,
                                            abs=1e-6)

    def test_second_kind_n0(self):
        result = mahler_quadrature(FamilySpec("second_kind", 0), loose)
        assert result.real == pytest.approx(7 * _zeta3 / (2 * math.pi ** 2),
                                            abs=1e-6)

    def test_maillot_variant(self):
        result = mahler_quadrature(FamilySpec("maillot_variant"), loose)
        expect = (3.5 * _zeta3 + math.pi ** 2 / 2 * math.log(2)) / \
            math.pi ** 2
        assert expect == pytest.approx(0.772851993, abs=1e-8)
        assert result.real == pytest.approx(expect, abs=1e-6)

    @pytest.mark.parametrize("a", [0.1, 0.25, 0.5])
    def test_second_kind_n0_small_a(self, a):
        # 4/pi^2 times the odd part of Li_3(a)
        series = sum(a ** k / k ** 3 for k in range(1, 80, 2))
        result = mahler_quadrature(FamilySpec("second_kind", 0, a=a), loose)
        assert result.real == pytest.approx(4 * series / math.pi ** 2,
                                            abs=5e-7)

    def test_second_kind_n0_grades_towards_kink_onset(self):
        reduced = jensen_reduce(FamilySpec("second_kind", 0, a=0.25))
        assert reduced.singular[0] == \
            pytest.approx((math.pi, 2 * math.acos(0.25)))
        wide = jensen_reduce(FamilySpec("second_kind", 0, a=2.0))
        assert wide.singular[0] == (math.pi, )

    def test_maillot_general_smyth(self):
        # 1 + x + y has measure L'(chi_-3, -1)
        expect = 3 * math.sqrt(3) / (4 * math.pi) * 0.7813024128964862
        family = FamilySpec("maillot_general", a=1, b=1, c=1)
        assert mahler_quadrature(family, loose).real == \
            pytest.approx(expect, abs=1e-8)

    def test_maillot_special_real_alpha(self):
        # 1 + 2x - y: log max(|1 + 2x|, 1) and |1 + 2x| >= 1
        family = FamilySpec("maillot_special", alpha=2)
        assert mahler_quadrature(family, loose).real == \
            pytest.approx(math.log(2), abs=1e-10)

    @pytest.mark.parametrize("family", [FamilySpec("first_kind", 1, a=2.0),
                                        FamilySpec("first_kind", 2, a=2.0),
                                        FamilySpec("second_kind", 0, a=2.0),
                                        FamilySpec("second_kind", 0, a=5.0)])
    def test_inversion(self, family):
        a = family.a
        large = mahler_quadrature(family, loose).real
        small = mahler_quadrature(family.with_a(1 / a), loose).real
        assert large == pytest.approx(math.log(a) + small, abs=1e-6)

    def test_scale_covariance(self):
        reduced = jensen_reduce(FamilySpec("second_kind", 0, a=0.5))
        plain = integrate_reduced(reduced, loose).real
        scaled = integrate_reduced(reduced.scaled(2), loose).real
        assert scaled - plain == pytest.approx(math.log(2), abs=1e-8)

    def test_scaled_constant(self):
        reduced = jensen_reduce(FamilySpec("first_kind", 0, a=3))
        assert reduced.scaled(2).constant == pytest.approx(math.log(6))

    def test_failure_carries_estimate(self):
        config = QuadratureConfig(points_per_dim=4, target_tol=1e-14)
        with pytest.raises(ConvergenceFailure) as error:
            mahler_quadrature(FamilySpec("first_kind", 2), config)
        assert error.value.best_estimate is not None
        assert error.value.best_estimate.real == pytest.approx(0.85,
                                                               abs=0.05)

    def test_qmc(self):
        config = QuadratureConfig(method="qmc_sobol_like",
                                  total_points=2 ** 16, shifts=4,
                                  target_tol=1e-1)
        result = mahler_quadrature(FamilySpec("first_kind", 2), config)
        assert result.within(7 * _zeta3 / math.pi ** 2,
                             max(result.abs_error, 1e-3))

    @pytest.mark.slow
    def test_first_kind_n3(self):
        expect = (7 * math.pi * _zeta3 + 4 * double_sum_S1().real) / \
            math.pi ** 3
        result = mahler_quadrature(FamilySpec("first_kind", 3),
                                   QuadratureConfig(points_per_dim=16,
                                                    target_tol=1e-2))
        assert result.real == pytest.approx(expect, abs=1e-4)

    @pytest.mark.slow
    def test_second_kind_n2_qmc(self):
        config = QuadratureConfig(method="qmc_sobol_like",
                                  total_points=2 ** 20, shifts=8,
                                  target_tol=1e-1)
        result = mahler_quadrature(FamilySpec("second_kind", 2), config)
        assert result.real == pytest.approx(0.9900730, abs=5e-3)


class TestMonteCarlo(object):
    def test_constant_has_no_variance(self):
        result = mahler_monte_carlo(FamilySpec("first_kind", 0, a=2.0), 1000)
        assert result.real == pytest.approx(math.log(2))
        assert result.abs_error == 0

    def test_too_few_samples(self):
        with pytest.raises(ValueError):
            mahler_monte_carlo(FamilySpec("first_kind", 1), 999)

    def test_deterministic(self):
        family = FamilySpec("maillot_variant")
        assert mahler_monte_carlo(family, 5000, seed=3) == \
            mahler_monte_carlo(family, 5000, seed=3)

    @pytest.mark.parametrize("kind,n", [("first_kind", 1),
                                        ("first_kind", 2),
                                        ("second_kind", 0)])
    @pytest.mark.parametrize("a", [0.5, 1.0, 2.0])
    def test_agrees_with_quadrature(self, kind, n, a):
        family = FamilySpec(kind, n, a=a)
        sampled = mahler_monte_carlo(family, 10 ** 5, seed=1)
        exact = mahler_quadrature(family, loose)
        assert abs(sampled.real - exact.real) <= \
            sampled.abs_error + exact.abs_error

    def test_maillot_variant(self):
        sampled = mahler_monte_carlo(FamilySpec("maillot_variant"), 10 ** 5)
        assert sampled.within(0.772851993, sampled.abs_error)

    @pytest.mark.slow
    def test_first_kind_n3(self):
        expect = (7 * math.pi * _zeta3 + 4 * double_sum_S1().real) / \
            math.pi ** 3
        sampled = mahler_monte_carlo(FamilySpec("first_kind", 3), 10 ** 6)
        assert sampled.within(expect, sampled.abs_error)

    @pytest.mark.slow
    def test_second_kind_n2(self):
        sampled = mahler_monte_carlo(FamilySpec("second_kind", 2), 10 ** 7)
        assert sampled.within(93 * 1.0369277551433699 / math.pi ** 4,
                              sampled.abs_error)


class TestParamTransform(object):
    def test_log_plus_gives_catalan(self):
        result = param_transform(log_plus, 1.0)
        assert result.real == pytest.approx(2 * _catalan / math.pi,
                                            abs=1e-8)

    def test_pair_form(self):
        pair = (lambda x: 0.0, lambda x: math.log(x))
        for a in (0.25, 2.0):
            assert param_transform(pair, a).real == \
                pytest.approx(param_transform(log_plus, a).real, abs=1e-10)

    def test_zero(self):
        assert param_transform(lambda x: 0.0, 0.7).real == 0

    def test_matches_quadrature(self):
        a = 0.6
        numeric = mahler_quadrature(FamilySpec("first_kind", 1, a=a), loose)
        assert param_transform(log_plus, a).real == \
            pytest.approx(numeric.real, abs=1e-8)

    def test_bad_parameter(self):
        with pytest.raises(ValueError):
            param_transform(log_plus, 0)
