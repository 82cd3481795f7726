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
Independent numerical Mahler measures of the polynomial families.

Every family is linear in one variable, so Jensen's formula removes it:
the torus average of ``log|A + B y|`` over y is ``log max(|A|, |B|)``.
What is left is a bounded-above integrand with logarithmic singularities
on a torus of dimension at most four, integrated here by a graded tensor
Gauss-Legendre rule, a shifted low discrepancy rule or plain Monte Carlo.

The families (``w_i``, ``x``, ``y``, ``z`` on the unit circle):

* ``first_kind`` n: ``(1+w_1)...(1+w_n) + a (1-w_1)...(1-w_n) y``
* ``second_kind`` n: ``(1+w_1)...(1+w_n)(1+x) + a (1-w_1)...(1-w_n)(y+z)``
* ``maillot_variant``: ``1 + w + 2 w y + (1 - w) x``
* ``maillot_general`` (a, b, c): ``a + b x + c y``
* ``maillot_special`` alpha: ``1 + alpha x + (1 - alpha) y``
"""

import math
import logging
from collections import namedtuple

import numpy as np

from .numerics_core import (ValueWithError, ConvergenceFailure,
                            QuadratureConfig, graded_mesh,
                            gauss_legendre_rule, low_discrepancy_points,
                            integrate_1d)

logger = logging.getLogger("mahler.mahler_numeric")

__all__ = ["FamilySpec", "ReducedIntegrand", "jensen_reduce",
           "integrate_reduced",
           "mahler_quadrature", "mahler_monte_carlo", "param_transform",
           "ReductionError", "KINDS"]

KINDS = {
    "first_kind": (0, 3),
    "second_kind": (0, 2),
    "maillot_variant": (0, 0),
    "maillot_general": (0, 0),
    "maillot_special": (0, 0),
}

_CHUNK = 2 ** 21
_TWO_PI = 2 * math.pi


class FamilySpec(namedtuple("FamilySpec",
                            ["kind", "n", "a", "b", "c", "alpha"])):
    """
    One polynomial of the families listed in the module docstring.

    *a* is the family parameter; for ``maillot_general`` the three
    coefficients are *a*, *b*, *c*, and for ``maillot_special`` *alpha* is
    the complex coefficient and *a* is set to ``|alpha|``.

    :raises ReductionError: for an unknown kind or out of range n
    """

    __slots__ = ()

    def __new__(cls, kind, n=0, a=1.0, b=None, c=None, alpha=None):
        if kind not in KINDS:
            raise ReductionError("unknown family {0!r}".format(kind))
        lo, hi = KINDS[kind]
        if int(n) != n or not lo <= n <= hi:
            raise ReductionError("{0} needs {1} <= n <= {2}, got {3!r}"
                                 .format(kind, lo, hi, n))

        if kind == "maillot_special":
            if alpha is None:
                raise ReductionError("maillot_special needs alpha")
            alpha = complex(alpha)
            if alpha in (0, 1):
                raise ReductionError("alpha must avoid 0 and 1")
            a = abs(alpha)
        elif kind == "maillot_general":
            if b is None or c is None or min(a, b, c) <= 0:
                raise ReductionError("maillot_general needs a, b, c > 0")
            b, c = float(b), float(c)

        if not a > 0:
            raise ReductionError("a must be positive, got {0!r}".format(a))
        return super(FamilySpec, cls).__new__(cls, kind, int(n), float(a),
                                              b, c, alpha)

    @property
    def variable_count(self):
        if self.kind == "first_kind":
            return self.n + 1
        if self.kind == "second_kind":
            return self.n + 3
        if self.kind == "maillot_variant":
            return 3
        return 2

    @property
    def dimension(self):
        """Torus dimension left after the Jensen reduction."""
        return self.variable_count - 1

    @property
    def label(self):
        if self.kind in ("first_kind", "second_kind"):
            return "{0}_n{1}".format(self.kind, self.n)
        return self.kind

    def with_a(self, a):
        return self._replace(a=float(a))


class ReducedIntegrand(object):
    """
    ``log max(U, V)`` on a box, after a Jensen reduction.

    :type arguments: callable
    :param arguments: maps angles of shape ``(..., dimension)`` to the pair
                      of non-negative arrays ``(U, V)``
    :param bounds: ``(lo, hi)`` for each angle
    :param normalization: factor turning the box integral into the
                          measure (the ``(2 pi)**-d`` and any folding)
    :param singular: for each angle, the values towards which the mesh is
                     graded
    :param kinks: callable mapping the leading ``dimension - 1`` angles to
                  the points (shape ``(..., K)``, NaN for none) in the last
                  angle where ``U == V``
    :param singular_locus: human readable description of where the
                           integrand is singular
    :param constant: the measure itself, for dimension 0
    """

    def __init__(self, dimension, arguments=None, bounds=(), normalization=1.0,
                 singular=(), kinks=None, singular_locus="",
                 constant=None):
        self.dimension = dimension
        self.arguments = arguments
        self.bounds = list(bounds)
        self.normalization = normalization
        self.singular = list(singular)
        self.kinks = kinks
        self.singular_locus = singular_locus
        self.constant = constant

    def __repr__(self):
        return "<mahler.ReducedIntegrand: dimension {0}>".format(
            self.dimension)

    def evaluate(self, theta):
        if self.dimension == 0:
            return np.full(np.shape(theta)[:-1], self.constant)
        u, v = self.arguments(np.asarray(theta, dtype=float))
        with np.errstate(divide="ignore"):
            return np.log(np.maximum(u, v))

    def scaled(self, factor):
        """The integrand of the polynomial multiplied by *factor*."""
        if self.dimension == 0:
            return ReducedIntegrand(0, constant=self.constant +
                                    math.log(factor))

        def arguments(theta):
            u, v = self.arguments(theta)
            return factor * u, factor * v

        return ReducedIntegrand(self.dimension, arguments, self.bounds,
                                self.normalization, self.singular,
                                self.kinks, self.singular_locus)


def _unit(theta):
    return np.exp(1j * theta)


def _circle_kinks(p, q, r):
    # angles phi in [0, 2 pi) with |p + q e^{i phi}| == r, NaN where none
    size_p = np.abs(p)
    size_q = np.abs(q)
    with np.errstate(divide="ignore", invalid="ignore"):
        cosine = (r ** 2 - size_p ** 2 - size_q ** 2) / (2 * size_p * size_q)
        spread = np.arccos(cosine)[..., np.newaxis]
    centre = (np.angle(p) - np.angle(q))[..., np.newaxis]
    found = np.mod(centre + np.array([-1.0, 1.0]) * spread, _TWO_PI)
    return np.where(np.isfinite(spread), found, np.nan)


def _first_kind(family):
    n, a = family.n, family.a
    if n == 0:
        return ReducedIntegrand(0, constant=math.log(max(1.0, a)),
                                singular_locus="none")

    def arguments(theta):
        c = np.prod(2 * np.abs(np.cos(theta / 2)), axis=-1)
        s = np.prod(2 * np.abs(np.sin(theta / 2)), axis=-1)
        return c, a * s

    def kinks(prefix):
        c = np.prod(2 * np.cos(prefix / 2), axis=-1)
        s = np.prod(2 * np.sin(prefix / 2), axis=-1)
        return 2 * np.arctan2(c, a * s)[..., np.newaxis]

    # the integrand is even in every angle, so fold onto [0, pi]
    return ReducedIntegrand(n, arguments, [(0, math.pi)] * n, math.pi ** -n,
                            [(0, math.pi)] * n, kinks,
                            "some angle at 0 together with another at pi")


def _second_kind(family):
    n, a = family.n, family.a

    def parts(theta):
        w = _unit(theta[..., :n])
        x = _unit(theta[..., n])
        p = np.prod(1 + w, axis=-1) * (1 + x)
        q = a * np.prod(1 - w, axis=-1)
        return p, q

    def arguments(theta):
        p, q = parts(theta)
        return np.abs(p + q * _unit(theta[..., n + 1])), np.abs(q)

    def kinks(prefix):
        p, q = parts(prefix)
        return _circle_kinks(p, q, np.abs(q))

    # conjugating every variable is a symmetry; fold the x angle
    bounds = [(0, _TWO_PI)] * n + [(0, math.pi), (0, _TWO_PI)]
    x_singular = (math.pi, )
    if n == 0 and a < 1:
        # past |1 + x| = 2a the last angle has no kinks
        x_singular += (2 * math.acos(a), )
    singular = [(0, math.pi, _TWO_PI)] * n + [x_singular, ()]
    return ReducedIntegrand(n + 2, arguments, bounds, 2 * _TWO_PI ** -(n + 2),
                            singular, kinks,
                            "some w at 1 together with x or another w at -1")


def _maillot_variant(family):
    def parts(theta):
        w = _unit(theta[..., 0])
        return 1 + w, 2 * w, np.abs(1 - w)

    def arguments(theta):
        p, q, r = parts(theta)
        return np.abs(p + q * _unit(theta[..., 1])), r

    def kinks(prefix):
        return _circle_kinks(*parts(prefix))

    return ReducedIntegrand(2, arguments, [(0, math.pi), (0, _TWO_PI)],
                            2 * _TWO_PI ** -2, [(0, math.pi), (math.pi, )],
                            kinks, "w = 1, y = -1")


def _maillot_linear(p, q, r, symmetric):
    def arguments(theta):
        return np.abs(p + q * _unit(theta[..., 0])), np.full(theta.shape[:-1],
                                                             r)

    def kinks(prefix):
        shape = prefix.shape[:-1]
        return np.broadcast_to(_circle_kinks(np.complex128(p),
                                             np.complex128(q), r),
                               shape + (2, ))

    if symmetric:
        return ReducedIntegrand(1, arguments, [(0, math.pi)], 1 / math.pi,
                                [()], kinks, "none")
    return ReducedIntegrand(1, arguments, [(0, _TWO_PI)], 1 / _TWO_PI, [()],
                            kinks, "none")


def jensen_reduce(family):
    """
    Remove the linear variable of *family* (``y`` for the first kind,
    ``z`` for the second kind, ``x`` for the Maillot polynomials).

    :returns: :class:`ReducedIntegrand`
    :raises ReductionError: for anything that is not one of the families
    """
    if not isinstance(family, FamilySpec):
        raise ReductionError("not a polynomial family: {0!r}".format(family))
    if family.kind == "first_kind":
        return _first_kind(family)
    if family.kind == "second_kind":
        return _second_kind(family)
    if family.kind == "maillot_variant":
        return _maillot_variant(family)
    if family.kind == "maillot_general":
        return _maillot_linear(family.a, family.b, family.c, True)
    alpha = family.alpha
    return _maillot_linear(1.0, alpha, abs(1 - alpha), alpha.imag == 0)


def _tensor(reduced, order, ratio, levels):
    d = reduced.dimension
    meshes = [graded_mesh(lo, hi, singular, ratio, levels)
              for (lo, hi), singular in zip(reduced.bounds, reduced.singular)]

    rules = [gauss_legendre_rule(mesh, order) for mesh in meshes[:-1]]
    if rules:
        grids = np.meshgrid(*[nodes for nodes, _ in rules], indexing="ij")
        prefix = np.stack([g.ravel() for g in grids], axis=-1)
        weights = np.meshgrid(*[w for _, w in rules], indexing="ij")
        prefix_weights = np.prod([w.ravel() for w in weights], axis=0)
    else:
        prefix = np.zeros((1, 0))
        prefix_weights = np.ones(1)

    lo, hi = reduced.bounds[-1]
    base = meshes[-1]
    extra = 0 if reduced.kinks is None else \
        np.shape(reduced.kinks(prefix[:1]))[-1]
    per_point = (len(base) + extra) * order
    step = max(1, _CHUNK // (per_point * d))

    total = 0.0
    for start in range(0, len(prefix), step):
        block = prefix[start:start + step]
        count = len(block)
        edges = np.broadcast_to(base, (count, len(base)))
        if extra:
            kinks = reduced.kinks(block)
            kinks = np.where(np.isfinite(kinks), np.clip(kinks, lo, hi), lo)
            edges = np.sort(np.concatenate([edges, kinks], axis=1), axis=1)
        nodes, weights = gauss_legendre_rule(edges, order)
        theta = np.concatenate(
            [np.broadcast_to(block[:, np.newaxis, :],
                             nodes.shape + (d - 1, )),
             nodes[..., np.newaxis]], axis=-1)
        values = reduced.evaluate(theta)
        total += np.sum(prefix_weights[start:start + step] *
                        np.sum(weights * values, axis=1))

    logger.debug("tensor rule of order {0}: {1} outer points, {2} inner"
                 .format(order, len(prefix), per_point))
    return total * reduced.normalization


def _box(reduced, unit_points):
    lo = np.array([b[0] for b in reduced.bounds])
    hi = np.array([b[1] for b in reduced.bounds])
    return lo + (hi - lo) * unit_points, float(np.prod(hi - lo))


def _sampled_mean(reduced, sampler, count):
    # mean and variance of the integrand over count points, in chunks
    step = max(1, _CHUNK // max(1, reduced.dimension))
    total = 0.0
    squares = 0.0
    for start in range(0, count, step):
        points, volume = _box(reduced, sampler(start, min(step,
                                                          count - start)))
        values = reduced.evaluate(points)
        total += np.sum(values)
        squares += np.sum(values ** 2)
    mean = total / count
    variance = max(0.0, squares / count - mean ** 2)
    return mean * volume * reduced.normalization, \
        variance * (volume * reduced.normalization) ** 2


def _qmc(reduced, config):
    d = reduced.dimension
    shifts = np.random.default_rng(config.seed).random((config.shifts, d))
    step = low_discrepancy_points(1, d, np.zeros(d))[0]
    estimates = []
    for shift in shifts:
        def sampler(start, count, shift=shift):
            return low_discrepancy_points(count, d, shift + start * step)
        estimates.append(_sampled_mean(reduced, sampler,
                                       config.total_points)[0])
    estimates = np.array(estimates)
    spread = np.std(estimates, ddof=1)
    return float(np.mean(estimates)), \
        3 * spread / math.sqrt(len(estimates))


def integrate_reduced(reduced, config=None):
    """
    The normalized integral of a :class:`ReducedIntegrand`.

    ``gauss_legendre_tensor`` (used for dimension three and below) nests
    composite Gauss-Legendre rules graded towards the singular angles, and
    splits the innermost panels at the kinks of the max. Its error
    estimate is the change from half the order. Dimension four, or
    ``qmc_sobol_like``, uses shifted low discrepancy points with the
    spread over the shifts as error estimate.

    :returns: :class:`~mahler.numerics_core.ValueWithError`
    :raises ConvergenceFailure: if the error estimate exceeds
                                ``config.target_tol``; the estimate is
                                attached
    """
    if config is None:
        config = QuadratureConfig()
    if reduced.dimension == 0:
        return ValueWithError(reduced.constant, 0.0)

    if config.method == "monte_carlo":
        value, error = _monte_carlo(reduced, config.total_points,
                                    config.seed)
    elif config.method == "qmc_sobol_like" or reduced.dimension > 3:
        value, error = _qmc(reduced, config)
    else:
        order = config.points_per_dim
        value = _tensor(reduced, order, config.grading_ratio,
                        config.grading_levels)
        coarse = _tensor(reduced, max(2, order // 2), config.grading_ratio,
                         config.grading_levels)
        error = abs(value - coarse) + 16 * np.finfo(float).eps

    result = ValueWithError(value, error)
    if error > config.target_tol:
        raise ConvergenceFailure("quadrature error {0:.3g} above target "
                                 "{1:.3g}".format(error, config.target_tol),
                                 result)
    return result


def mahler_quadrature(family, config=None):
    """
    The Mahler measure of *family* by :func:`integrate_reduced` of its
    Jensen reduction.

    With the tensor rule the reported error is the change from a run at
    half of ``points_per_dim`` on the same panels, which bounds the error
    of the full order run once both are converging; it is not a
    comparison between refined grids.
    """
    if config is None:
        config = QuadratureConfig()
    result = integrate_reduced(jensen_reduce(family), config)
    logger.debug("m({0}, a={1}) = {2.real} +- {2.abs_error} by {3}"
                 .format(family.label, family.a, result, config.method))
    return result


def _monte_carlo(reduced, samples, seed):
    if reduced.dimension == 0:
        return ValueWithError(reduced.constant, 0.0)
    rng = np.random.default_rng(seed)
    mean, variance = _sampled_mean(
        reduced, lambda start, count: rng.random((count, reduced.dimension)),
        samples)
    return ValueWithError(mean, 3 * math.sqrt(variance / samples))


def mahler_monte_carlo(family, samples=10 ** 5, seed=0):
    """
    The Mahler measure of *family* as the mean of its reduced integrand at
    uniformly random torus points, with error ``3 * std / sqrt(samples)``.
    """
    if samples < 1000:
        raise ValueError("at least 1000 samples are needed")
    return _monte_carlo(jensen_reduce(family), samples, seed)


def _split(previous):
    if hasattr(previous, "F") and hasattr(previous, "G"):
        return previous.F, previous.G
    if isinstance(previous, tuple):
        return previous
    return previous, previous


def param_transform(previous, a, tol=1e-10):
    """
    The next level of a family from the measure of the previous one:

        (2/pi) [ int_0^1 F(x) a/(x^2 + a^2) dx
                 + int_0^1 G(1/x) a/(a^2 x^2 + 1) dx ]

    *previous* is a :class:`~mahler.formulas.PiecewiseClosedForm`, a pair
    ``(F, G)`` (F on (0, 1], G on [1, oo)) or a single function of a.
    """
    if not a > 0:
        raise ValueError("a must be positive, got {0!r}".format(a))
    f, g = _split(previous)

    def low(x):
        return float(np.real(f(x))) * a / (x * x + a * a)

    def high(x):
        return float(np.real(g(1 / x))) * a / (a * a * x * x + 1)

    first = integrate_1d(low, (0, 1), tol / 2, singularities=[0, 1])
    second = integrate_1d(high, (0, 1), tol / 2, singularities=[0, 1])
    total = (first + second) * (2 / math.pi)
    return ValueWithError(total.real, total.abs_error)


class ReductionError(ValueError):
    """The polynomial is not one of the families, or not linear"""
    pass
