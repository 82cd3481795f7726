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
Shared numeric substrate: values with error bounds, integration paths,
one dimensional quadrature, ODE transport of iterated integrals along paths
and alternating series acceleration.

Everything else in mahler is built on the handful of routines here, so
they are deliberately strict: non-finite values and silent non-convergence
are turned into :exc:`NumericalFailure` subclasses rather than returned.
"""

import math
import logging
from collections import namedtuple

import numpy as np
from scipy import integrate

logger = logging.getLogger("mahler.numerics_core")

__all__ = ["ValueWithError", "Line", "Arc", "IntegrationPath",
           "straight_path", "semicircle_path", "QuadratureConfig",
           "graded_edges", "graded_mesh", "gauss_legendre_rule",
           "low_discrepancy_points",
           "integrate_1d", "ode_along_path", "accelerate_alternating",
           "NumericalFailure", "ConvergenceFailure", "PoleOnPath",
           "NotAlternating"]

# points closer than this (relative to the path scale) are the same point
_COINCIDE = 1e-12
_SERIES_TERMS = 48
_CVZ_RATE = 3.0 + math.sqrt(8.0)


class ValueWithError(namedtuple("ValueWithError", ["value", "abs_error"])):
    """
    A complex value together with a non-negative absolute error estimate.

    Supports ``+``, ``-``, unary ``-`` and ``*`` against other
    :class:`ValueWithError` objects or plain numbers (which carry no
    error), and ``/`` by a plain number. Error estimates are propagated
    to first order plus the product of the two errors.

    Construction rejects non-finite values and negative or non-finite
    errors with :exc:`NumericalFailure`.
    """

    __slots__ = ()

    def __new__(cls, value, abs_error=0.0):
        value = complex(value)
        abs_error = float(abs_error)
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise NumericalFailure("non-finite value {0!r}".format(value))
        if not (math.isfinite(abs_error) and abs_error >= 0):
            raise NumericalFailure("invalid error estimate {0!r}"
                                   .format(abs_error))
        return super(ValueWithError, cls).__new__(cls, value, abs_error)

    @property
    def real(self):
        return self.value.real

    @property
    def imag(self):
        return self.value.imag

    def __add__(self, other):
        other = _coerce(other)
        return ValueWithError(self.value + other.value,
                              self.abs_error + other.abs_error)

    __radd__ = __add__

    def __neg__(self):
        return ValueWithError(-self.value, self.abs_error)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        error = (abs(self.value) * other.abs_error +
                 abs(other.value) * self.abs_error +
                 self.abs_error * other.abs_error)
        return ValueWithError(self.value * other.value, error)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = complex(other)
        return ValueWithError(self.value / other, self.abs_error / abs(other))

    def within(self, expected, tol):
        """True if ``expected`` lies within *tol* of :attr:`value`."""
        return abs(self.value - complex(expected)) <= tol


def _coerce(item):
    if isinstance(item, ValueWithError):
        return item
    return ValueWithError(item, 0.0)


class Line(object):
    """A straight segment ``start + (end - start) * t``, t in [0, 1]."""

    def __init__(self, start, end):
        self.start = complex(start)
        self.end = complex(end)
        if self.start == self.end:
            raise ValueError("degenerate line segment at {0}"
                             .format(self.start))

    def __repr__(self):
        return "Line(start={0}, end={1})".format(self.start, self.end)

    def key(self):
        return ("line", self.start, self.end)

    def point(self, t):
        return self.start + (self.end - self.start) * t

    def derivative(self, t=None):
        return self.end - self.start

    def length(self):
        return abs(self.end - self.start)

    def reversed(self):
        return Line(self.end, self.start)

    def split(self, t):
        middle = self.point(t)
        return Line(self.start, middle), Line(middle, self.end)

    def param_at_distance(self, distance):
        """Parameter of the point whose distance from :attr:`start` is
        *distance*."""
        return min(1.0, distance / self.length())

    def distance_to(self, z):
        delta = self.end - self.start
        t = ((z - self.start) * delta.conjugate()).real / abs(delta) ** 2
        t = min(1.0, max(0.0, t))
        return abs(z - self.point(t))


class Arc(object):
    """
    A circular arc ``center + radius * exp(i * theta)`` with theta running
    linearly from *theta0* to *theta1* (so the arc may be traversed either
    way). ``|theta1 - theta0|`` must not exceed a full turn.
    """

    def __init__(self, center, radius, theta0, theta1):
        self.center = complex(center)
        self.radius = float(radius)
        self.theta0 = float(theta0)
        self.theta1 = float(theta1)
        if self.radius <= 0 or self.theta0 == self.theta1:
            raise ValueError("degenerate arc")
        if abs(self.theta1 - self.theta0) > 2 * math.pi + 1e-12:
            raise ValueError("arc sweeps more than a full turn")

    def __repr__(self):
        return "Arc(center={0}, radius={1}, theta0={2}, theta1={3})" \
            .format(self.center, self.radius, self.theta0, self.theta1)

    def key(self):
        return ("arc", self.center, self.radius, self.theta0, self.theta1)

    @property
    def start(self):
        return self.point(0.0)

    @property
    def end(self):
        return self.point(1.0)

    def _theta(self, t):
        return self.theta0 + (self.theta1 - self.theta0) * t

    def point(self, t):
        return self.center + self.radius * np.exp(1j * self._theta(t))

    def derivative(self, t):
        sweep = self.theta1 - self.theta0
        return 1j * sweep * self.radius * np.exp(1j * self._theta(t))

    def length(self):
        return self.radius * abs(self.theta1 - self.theta0)

    def reversed(self):
        return Arc(self.center, self.radius, self.theta1, self.theta0)

    def split(self, t):
        theta = self._theta(t)
        return (Arc(self.center, self.radius, self.theta0, theta),
                Arc(self.center, self.radius, theta, self.theta1))

    def param_at_distance(self, distance):
        ratio = min(1.0, distance / (2 * self.radius))
        t = 2 * math.asin(ratio) / abs(self.theta1 - self.theta0)
        return min(1.0, t)

    def distance_to(self, z):
        offset = complex(z) - self.center
        rho = abs(offset)
        if rho == 0:
            return self.radius
        lo = min(self.theta0, self.theta1)
        hi = max(self.theta0, self.theta1)
        phase = math.atan2(offset.imag, offset.real)
        shifted = lo + (phase - lo) % (2 * math.pi)
        if shifted <= hi:
            return abs(rho - self.radius)
        return min(abs(z - self.start), abs(z - self.end))


class IntegrationPath(object):
    """
    A continuous, piecewise smooth path made of :class:`Line` and
    :class:`Arc` segments.

    :type segments: list
    :param segments: consecutive segments; each must start where the
                     previous one ended.
    :raises ValueError: if the segments are not continuous
    """

    def __init__(self, segments):
        self.segments = list(segments)
        if not self.segments:
            raise ValueError("empty path")

        scale = max(1.0, self.length())
        for before, after in zip(self.segments[:-1], self.segments[1:]):
            if abs(before.end - after.start) > _COINCIDE * scale * 10:
                raise ValueError("path is not continuous between {0!r} and "
                                 "{1!r}".format(before, after))

    def __repr__(self):
        return "IntegrationPath({0!r})".format(self.segments)

    def __iter__(self):
        return iter(self.segments)

    def __len__(self):
        return len(self.segments)

    def key(self):
        return tuple(segment.key() for segment in self.segments)

    @property
    def start(self):
        return self.segments[0].start

    @property
    def end(self):
        return self.segments[-1].end

    def length(self):
        return sum(segment.length() for segment in self.segments)

    def reversed(self):
        return IntegrationPath(s.reversed() for s in reversed(self.segments))

    def distances(self, points):
        """Distance from each of *points* to the path."""
        points = np.atleast_1d(np.asarray(points, dtype=complex))
        return np.array([min(s.distance_to(p) for s in self.segments)
                         for p in points])

    def clearance(self, points):
        """Smallest distance from any of *points* to the path."""
        points = np.atleast_1d(np.asarray(points, dtype=complex))
        if points.size == 0:
            return math.inf
        return float(self.distances(points).min())

    def split(self, fraction):
        """Split into two paths at *fraction* of the total arc length."""
        if not 0 < fraction < 1:
            raise ValueError("fraction must lie strictly between 0 and 1")

        target = fraction * self.length()
        walked = 0.0
        for index, segment in enumerate(self.segments):
            length = segment.length()
            if walked + length >= target:
                t = (target - walked) / length
                if t <= 0:
                    return (IntegrationPath(self.segments[:index]),
                            IntegrationPath(self.segments[index:]))
                if t >= 1:
                    return (IntegrationPath(self.segments[:index + 1]),
                            IntegrationPath(self.segments[index + 1:]))
                head, tail = segment.split(t)
                return (IntegrationPath(self.segments[:index] + [head]),
                        IntegrationPath([tail] + self.segments[index + 1:]))
            walked += length

        raise ValueError("could not split path")  # pragma: no cover


def straight_path(start, end):
    """The single segment path from *start* to *end*."""
    return IntegrationPath([Line(start, end)])


def semicircle_path(end, lower=True, start=0.0):
    """
    The half circle on the chord from *start* to *end*.

    With *lower* it passes to the right of the direction of travel, which
    for a positive real chord means below the real axis.
    """
    start = complex(start)
    end = complex(end)
    center = (start + end) / 2
    radius = abs(end - start) / 2
    direction = math.atan2((end - start).imag, (end - start).real)
    if lower:
        return IntegrationPath([Arc(center, radius,
                                    direction - math.pi, direction)])
    return IntegrationPath([Arc(center, radius, direction + math.pi,
                                direction)])


_QUADRATURE_METHODS = ("gauss_legendre_tensor", "qmc_sobol_like",
                       "monte_carlo")

_QuadratureConfigBase = namedtuple("QuadratureConfig",
    ["method", "points_per_dim", "total_points", "target_tol", "seed",
     "grading_ratio", "grading_levels", "shifts"])


class QuadratureConfig(_QuadratureConfigBase):
    """
    Settings for the torus integrators.

    *method* is one of ``gauss_legendre_tensor``, ``qmc_sobol_like`` or
    ``monte_carlo``. *points_per_dim* applies to the tensor rule (per
    sub-panel), *total_points* to the sampled methods. *seed* makes the
    sampled methods deterministic. The tensor rule grades its panels
    towards singular angles by *grading_ratio* over *grading_levels*
    levels; the quasi-Monte Carlo rule averages over *shifts* random
    translations of its point set.
    """

    __slots__ = ()

    def __new__(cls, method="gauss_legendre_tensor", points_per_dim=24,
                total_points=2 ** 16, target_tol=1e-6, seed=0,
                grading_ratio=0.5, grading_levels=8, shifts=2):
        if method not in _QUADRATURE_METHODS:
            raise ValueError("unknown quadrature method {0!r}".format(method))
        if points_per_dim < 2 or total_points < 1:
            raise ValueError("point counts must be positive")
        if not target_tol > 0:
            raise ValueError("target_tol must be positive")
        if not 0 < grading_ratio < 1 or grading_levels < 0 or shifts < 2:
            raise ValueError("invalid grading or shift settings")
        return super(QuadratureConfig, cls).__new__(
            cls, method, int(points_per_dim), int(total_points),
            float(target_tol), int(seed), float(grading_ratio),
            int(grading_levels), int(shifts))

    @classmethod
    def from_config(cls, config, **overrides):
        """Build from the ``quadrature`` section of a mahler config."""
        settings = dict(config.get("quadrature", {}) if config else {})
        settings.update((k, v) for k, v in overrides.items() if v is not None)
        return cls(**settings)


def graded_edges(lo, hi, left=False, right=False, ratio=0.5, levels=8):
    """
    Panel edges for [lo, hi], geometrically refined towards whichever
    ends are flagged singular.

    :returns: sorted :class:`numpy.ndarray` of edges, including both ends
    """
    if left and right:
        middle = (lo + hi) / 2
        return np.concatenate([graded_edges(lo, middle, True, False,
                                            ratio, levels),
                               graded_edges(middle, hi, False, True,
                                            ratio, levels)[1:]])

    fractions = ratio ** np.arange(levels, 0, -1)
    if left:
        inner = lo + (hi - lo) * fractions
    elif right:
        inner = (hi - (hi - lo) * fractions)[::-1]
    else:
        inner = np.empty(0)
    return np.concatenate([[lo], inner, [hi]])


def graded_mesh(lo, hi, singular=(), ratio=0.5, levels=8):
    """
    Panel edges for [lo, hi], cut at every point of *singular* inside the
    interval and graded geometrically towards each of them.
    """
    points = sorted(set(float(s) for s in singular if lo <= s <= hi))
    cuts = sorted(set([float(lo), float(hi)] + points))
    pieces = [graded_edges(p, q, p in points, q in points, ratio, levels)
              for p, q in zip(cuts[:-1], cuts[1:])]
    return np.concatenate([pieces[0]] + [piece[1:] for piece in pieces[1:]])


def gauss_legendre_rule(edges, order):
    """
    Composite Gauss-Legendre nodes and weights over the panels between
    consecutive *edges* (the last axis), *order* nodes per panel.

    *edges* may carry leading batch axes, in which case the returned
    nodes and weights have shape ``batch + (panels * order,)``. Zero
    width panels contribute zero weight.
    """
    xg, wg = np.polynomial.legendre.leggauss(order)
    edges = np.asarray(edges, dtype=float)
    lo = edges[..., :-1, np.newaxis]
    hi = edges[..., 1:, np.newaxis]
    middle = 0.5 * (hi + lo)
    half = 0.5 * (hi - lo)
    nodes = middle + half * xg
    weights = half * wg
    shape = nodes.shape[:-2] + (-1,)
    return nodes.reshape(shape), weights.reshape(shape)


def _golden(dimension):
    # generalised golden ratio: positive root of x**(d+1) = x + 1
    x = 2.0
    for _ in range(30):
        x = pow(1 + x, 1.0 / (dimension + 1))
    return x


def low_discrepancy_points(count, dimension, shift):
    """
    *count* points of the additive recurrence (Kronecker) sequence in the
    unit cube ``[0, 1) ** dimension``, translated by *shift* modulo 1.
    """
    g = _golden(dimension)
    alpha = np.array([pow(1 / g, j + 1) % 1 for j in range(dimension)])
    steps = np.arange(1, count + 1, dtype=float)[:, np.newaxis]
    return (np.asarray(shift, dtype=float) + alpha * steps) % 1


def integrate_1d(f, interval, tol=1e-10, singularities=(), ratio=0.5,
                 levels=8, limit=200):
    """
    Adaptive quadrature of *f* over *interval* = ``(a, b)``.

    The interval is cut at every declared singularity inside it and each
    piece is graded geometrically towards the singular ends before being
    handed to :func:`scipy.integrate.quad`. Complex valued integrands are
    integrated as separate real and imaginary parts.

    :returns: :class:`ValueWithError`
    :raises ConvergenceFailure: if quad reports trouble and the combined
                                error estimate exceeds *tol*; the best
                                estimate is attached to the exception
    """
    a, b = (float(x) for x in interval)
    if a == b:
        return ValueWithError(0.0, 0.0)
    sign = 1.0
    if b < a:
        a, b = b, a
        sign = -1.0

    grid = graded_mesh(a, b, singularities, ratio, levels)
    panels = list(zip(grid[:-1], grid[1:]))

    sample = f(0.5 * (a + b))
    parts = [lambda x: float(np.real(f(x)))]
    if np.iscomplexobj(sample):
        parts.append(lambda x: float(np.imag(f(x))))

    share = tol / len(panels) / len(parts)
    totals = [0.0, 0.0]
    error = 0.0
    troubled = []

    for number, part in enumerate(parts):
        for lo, hi in panels:
            result = integrate.quad(part, lo, hi, epsabs=share,
                                    epsrel=1e-13, limit=limit,
                                    full_output=1)
            totals[number] += result[0]
            error += result[1]
            if len(result) > 3:
                troubled.append((lo, hi, result[3]))

    value = sign * complex(totals[0], totals[1])
    error += 4 * np.finfo(float).eps * abs(value)

    if troubled and error > tol:
        lo, hi, message = troubled[0]
        raise ConvergenceFailure("quad did not converge on [{0}, {1}]: {2}"
                                 .format(lo, hi, message.strip()),
                                 ValueWithError(value, error))

    logger.debug("integrate_1d over [{0}, {1}] with {2} panels: {3} +- {4}"
                 .format(a, b, len(panels), value, error))
    return ValueWithError(value, error)


def _series_start(betas, u, terms=_SERIES_TERMS):
    # Taylor coefficients of the iterated integrals about the start point.
    # h_j' = h_{j-1} / (u - beta_j); poles at the start point (beta == 0)
    # are only allowed once h_{j-1} vanishes there.
    powers = np.arange(1, terms + 1)
    monomials = u ** np.arange(terms + 1)
    coefficients = np.zeros(terms + 1, dtype=complex)
    coefficients[0] = 1.0
    values = np.empty(len(betas), dtype=complex)

    for index, beta in enumerate(betas):
        fresh = np.zeros(terms + 1, dtype=complex)
        if beta == 0:
            if coefficients[0] != 0:
                raise PoleOnPath(0j, index, "non-integrable pole at the "
                                 "start of the path")
            fresh[1:] = coefficients[1:] / powers
        else:
            kernel = -beta ** -(np.arange(terms) + 1.0)
            fresh[1:] = np.convolve(coefficients, kernel)[:terms] / powers
        coefficients = fresh
        values[index] = np.dot(coefficients, monomials)

    return values


def _solve_segment(segment, poles, state, lo, rtol, atol):
    def rhs(t, y):
        previous = np.empty_like(y)
        previous[0] = 1.0
        previous[1:] = y[:-1]
        z = segment.point(t)
        return previous * segment.derivative(t) / (z - poles)

    solution = integrate.solve_ivp(rhs, (lo, 1.0), state, method="DOP853",
                                   rtol=rtol, atol=atol)
    if solution.status != 0:
        raise ConvergenceFailure("ODE solver failed on {0!r}: {1}"
                                 .format(segment, solution.message))
    return solution.y[:, -1]


def _transport(path, poles, local_tol):
    poles = np.asarray(poles, dtype=complex)
    segments = list(path)
    start = path.start
    coincide = _COINCIDE * max(1.0, path.length())

    betas = poles - start
    betas[np.abs(betas) <= coincide] = 0
    if betas[0] == 0:
        raise PoleOnPath(poles[0], 0, "non-integrable pole at the start of "
                         "the path")

    # expand to a point near the start, away from every other pole
    nearest = np.abs(betas[betas != 0]).min()
    first = segments[0]
    radius = min(0.25 * nearest, 0.5 * abs(first.end - first.start))
    t0 = first.param_at_distance(radius)
    state = _series_start(betas / nearest, (first.point(t0) - start) / nearest)

    atol = local_tol * 1e-2
    for index, segment in enumerate(segments):
        lo = t0 if index == 0 else 0.0
        if lo < 1.0:
            state = _solve_segment(segment, poles, state, lo, local_tol, atol)
    return state


def ode_along_path(path, poles, local_tol=1e-12, clearance_min=None,
                   allow_end_pole=False):
    """
    Transport the iterated integrals

        h_j(z) = integral of h_{j-1}(t) dt / (t - b_j),   h_0 = 1,

    along *path* from its start, for the word ``poles = (b_1, ..., b_w)``.

    The integrals start from a power series about the start point, so
    poles sitting exactly at the start point are accepted for every letter
    but the first (where the integral diverges). Every other pole must be
    at least *clearance_min* (default ``1e-3 * path.length()``) away from
    the path.

    If *allow_end_pole* is set, poles at the end point are handled by
    splitting the path and recombining forward and reversed transports
    (the path composition rule for iterated integrals). The prefix values
    that end on a letter sitting at the end point diverge; their entries in
    the result are ``None``.

    :returns: list ``[h_1(end), ..., h_w(end)]`` of complex numbers
    :raises PoleOnPath: naming the offending pole and its letter index
    :raises ConvergenceFailure: if the ODE solver gives up
    """
    poles = np.atleast_1d(np.asarray(poles, dtype=complex))
    if poles.size == 0:
        return []

    length = path.length()
    if clearance_min is None:
        clearance_min = 1e-3 * length
    coincide = _COINCIDE * max(1.0, length)

    at_start = np.abs(poles - path.start) <= coincide
    at_end = np.abs(poles - path.end) <= coincide
    distances = path.distances(poles)

    for index, pole in enumerate(poles):
        if at_start[index] or at_end[index]:
            continue
        if distances[index] < clearance_min:
            raise PoleOnPath(pole, index, "pole within {0:.3g} of the path; "
                             "choose another branch".format(clearance_min))

    if at_end.any() and not allow_end_pole:
        index = int(np.flatnonzero(at_end)[0])
        raise PoleOnPath(poles[index], index, "pole at the end of the path")

    if not at_end.any():
        values = _transport(path, poles, local_tol)
        logger.debug("transported word of length {0} along {1!r}"
                     .format(poles.size, path))
        return list(values)

    head, tail = path.split(0.5)
    backwards = tail.reversed()
    forward = np.concatenate([[1.0], _transport(head, poles, local_tol)])

    values = []
    for j in range(1, poles.size + 1):
        if at_end[j - 1]:
            values.append(None)
            continue
        reverse = np.concatenate(
            [[1.0], _transport(backwards, poles[:j][::-1], local_tol)])
        signs = (-1.0) ** (j - np.arange(j + 1))
        values.append(complex(np.sum(forward[:j + 1] * signs *
                                     reverse[j::-1])))

    logger.debug("transported word of length {0} along {1!r} through an "
                 "end point pole".format(poles.size, path))
    return values


def _cvz(magnitudes, n):
    d = _CVZ_RATE ** n
    d = (d + 1 / d) / 2
    b = -1.0
    c = -d
    total = 0.0
    for k in range(n):
        c = b - c
        total += c * magnitudes[k]
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1))
    return total / d


def accelerate_alternating(term_fn, tol=1e-15, max_terms=80):
    """
    Sum ``sum_{k >= 0} term_fn(k)`` for an alternating series with terms
    of decreasing magnitude, using the Cohen, Rodriguez Villegas and
    Zagier weighting. Convergence is geometric with ratio about 1/5.83
    regardless of how slowly the terms themselves decay.

    :returns: :class:`ValueWithError`
    :raises NotAlternating: if the sampled terms do not alternate in sign
    """
    n = int(math.ceil(math.log(2.0 / tol) / math.log(_CVZ_RATE))) + 1
    n = max(4, min(n, max_terms))
    terms = np.array([float(term_fn(k)) for k in range(n + 4)])

    if not np.all(terms[:-1] * terms[1:] < 0):
        raise NotAlternating("terms do not alternate in sign: {0!r}"
                             .format(terms[:6]))

    magnitudes = np.abs(terms)
    if np.any(magnitudes[1:] > magnitudes[:-1] * (1 + 1e-12)):
        logger.warning("alternating terms are not monotone; the error "
                       "estimate may be optimistic")

    sign = math.copysign(1.0, terms[0])
    coarse = _cvz(magnitudes, n)
    fine = _cvz(magnitudes, n + 4)
    error = max(abs(fine - coarse), 2 * magnitudes[0] * _CVZ_RATE ** -(n + 4))
    error += 4 * np.finfo(float).eps * abs(fine)
    return ValueWithError(sign * fine, error)


class NumericalFailure(Exception):
    """A computation could not reach its target accuracy."""

    def __init__(self, message, best_estimate=None):
        super(NumericalFailure, self).__init__(message)
        self.best_estimate = best_estimate


class ConvergenceFailure(NumericalFailure):
    """Quadrature, ODE solving or a series failed to converge"""
    pass


class PoleOnPath(NumericalFailure):
    """A pole of the integrand lies on (or too near) the integration path"""

    def __init__(self, pole, index, message="pole on the integration path"):
        super(PoleOnPath, self).__init__(
            "{0} (pole {1} at letter {2})".format(message, pole, index))
        self.pole = pole
        self.index = index


class NotAlternating(NumericalFailure):
    """Series handed to the alternating accelerator does not alternate"""
    pass
