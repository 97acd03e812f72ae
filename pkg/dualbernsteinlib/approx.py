#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: approx.py
#
# Copyright 2026 Costas Tyfoxylos
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software and associated documentation files (the "Software"), to
#  deal in the Software without restriction, including without limitation the
#  rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
#  sell copies of the Software, and to permit persons to whom the Software is
#  furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
#  all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
#  IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
#  FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
#  AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
#  LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
#  FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
#  DEALINGS IN THE SOFTWARE.
#

"""
Constrained least squares approximation in Bernstein form and its applications.

The solver consumes only what a target function exposes through a moment
provider: derivatives at the two endpoints and inner products with the
Bernstein basis of the output degree. Degree reduction of Bezier curves,
clipping based root finding and polynomial approximation of rational Bezier
curves are built on top of it.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import abc
import logging
import math
from dataclasses import dataclass

import numpy as np

from .basis import (BezierCurve,
                    bernstein_basis_matrix,
                    bernstein_gram,
                    degree_elevate,
                    restrict)
from .configuration import (CLIP_DEGREE,
                            CLIP_MIN_SHRINK,
                            DEFAULT_ROOT_MAX_ITERATIONS,
                            DEFAULT_ROOT_TOLERANCE,
                            MAX_RATIONAL_CONSTRAINT_ORDER,
                            QUADRATURE_NODES_PER_DEGREE)
from .dualbernsteinlibexceptions import (DegreeMismatch,
                                         IndexOutOfRange,
                                         InvalidParameters,
                                         UnsupportedOrder)
from .dualcore import ConstraintSpec, ctable_build
from .specfun import JacobiParams, gauss_jacobi, pochhammer, pochhammer_ratio

__author__ = '''Costas Tyfoxylos <costas.tyf@gmail.com>'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<costas.tyf@gmail.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


# This is the main prefix used for logging
LOGGER_BASENAME = '''dualbernsteinlib.approx'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

SIDES = ('left', 'right')


def _validate_side(side):
    if side not in SIDES:
        raise InvalidParameters(f'Side should be one of {SIDES}, got {side!r}')


@dataclass(frozen=True, eq=False)
class RationalBezier:
    """A rational Bezier curve sum w_i r_i B_i^n / sum w_i B_i^n.

    Raises:
        InvalidParameters: if a weight is not positive.
        DegreeMismatch: if there is not one weight per control point.

    """

    points: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        points = BezierCurve(self.points).points
        weights = np.array(self.weights, dtype=float).ravel()
        if weights.size != points.shape[0]:
            raise DegreeMismatch(f'Got {weights.size} weights for {points.shape[0]} control points')
        if not np.all(weights > 0):
            raise InvalidParameters(f'Weights should all be positive, got {weights.tolist()}')
        weights.setflags(write=False)
        object.__setattr__(self, 'points', points)
        object.__setattr__(self, 'weights', weights)

    @property
    def degree(self):
        """The degree n of numerator and denominator."""
        return self.points.shape[0] - 1

    @property
    def dimension(self):
        """The number of coordinates of each control point."""
        return self.points.shape[1]

    @property
    def numerator(self):
        """The polynomial curve sum w_i r_i B_i^n."""
        return BezierCurve(self.weights[:, np.newaxis] * self.points)

    @property
    def denominator(self):
        """The scalar polynomial sum w_i B_i^n, positive on [0, 1]."""
        return BezierCurve(self.weights)

    def __call__(self, x):
        return self.numerator(x) / self.denominator(x)


class MomentProvider(abc.ABC):
    """Interface for the data the constrained least squares solver needs from a target function."""

    def __init__(self):
        self._logger = logging.getLogger(f'{LOGGER_BASENAME}.{self.__class__.__name__}')

    @abc.abstractmethod
    def endpoint_derivatives(self, side, count):
        """Should return the derivatives of orders 0..count-1 at one endpoint.

        Returns:
            numpy.ndarray: a (count, d) array.

        """

    @abc.abstractmethod
    def moments(self, m, params):
        """Should return the inner products <f, B_j^m> for j = 0..m.

        Returns:
            numpy.ndarray: an (m+1, d) array.

        """


class PolynomialMoments(MomentProvider):
    """Exact moments and derivatives of a polynomial curve in Bernstein form."""

    def __init__(self, curve):
        super().__init__()
        self.curve = curve

    def endpoint_derivatives(self, side, count):
        derivatives = np.zeros((count, self.curve.dimension))
        for order in range(min(count, self.curve.degree + 1)):
            derivatives[order] = endpoint_derivative(self.curve, side, order)
        return derivatives

    def moments(self, m, params):
        return bernstein_gram(self.curve.degree, m, params).T @ self.curve.points


class RationalMoments(MomentProvider):
    """Moments of a rational Bezier curve by quadrature, derivatives by the quotient rule."""

    def __init__(self, rational, nodes=None):
        super().__init__()
        self.rational = rational
        self.nodes = nodes

    def endpoint_derivatives(self, side, count):
        return rational_endpoint_derivatives(self.rational, side, count)

    def moments(self, m, params):
        return rational_moments(self.rational, m, params, self.nodes)


class FunctionMoments(MomentProvider):
    """An arbitrary function given as a callable, with its endpoint derivatives supplied.

    Args:
        function (callable): maps an array of N parameters to N values or an (N, d) array.
        left_derivatives: f(0), f'(0), ... as numbers or d-vectors.
        right_derivatives: f(1), f'(1), ... as numbers or d-vectors.
        nodes (int): the number of Gauss-Jacobi nodes used for the moments.

    """

    def __init__(self, function, left_derivatives=(), right_derivatives=(), nodes=64):
        super().__init__()
        self.function = function
        self._derivatives = {'left': np.asarray(left_derivatives, dtype=float),
                             'right': np.asarray(right_derivatives, dtype=float)}
        self.nodes = nodes

    def endpoint_derivatives(self, side, count):
        _validate_side(side)
        derivatives = self._derivatives[side]
        if len(derivatives) < count:
            raise InvalidParameters(f'{count} derivatives needed at the {side} endpoint, '
                                    f'{len(derivatives)} were supplied')
        return derivatives[:count]

    def moments(self, m, params):
        x, w = gauss_jacobi(self.nodes, params)
        values = np.asarray(self.function(x), dtype=float).reshape(len(x), -1)
        self._logger.debug('Function moments of degree %s from %s nodes', m, self.nodes)
        return bernstein_basis_matrix(m, x).T @ (w[:, np.newaxis] * values)


@dataclass(frozen=True)
class ApproxProblem:
    """Least squares approximation of a target by a degree m polynomial with endpoint constraints.

    Args:
        target (MomentProvider): the function to approximate.
        spec (ConstraintSpec): the output degree m and the constraint orders k, l.
        params (JacobiParams): the weight of the norm.

    """

    target: MomentProvider
    spec: ConstraintSpec
    params: JacobiParams = JacobiParams()


def kij(spec, params, i, j):
    """K_ij = <B_j^m, D_i^(m,k,l)> for an admissible i and a constrained index j.

    Args:
        spec (ConstraintSpec): the output degree m and constraint orders k, l.
        params (JacobiParams): the weight exponents.
        i (int): an index in k..m-l.
        j (int): an index below k or above m-l.

    Raises:
        IndexOutOfRange: if i is not admissible or j is not constrained.

    """
    m, k, l = spec.n, spec.k, spec.l  # noqa: E741
    if not spec.contains(i):
        raise IndexOutOfRange(f'i = {i} outside {spec.first}..{spec.last}')
    if not 0 <= j <= m or spec.contains(j):
        raise IndexOutOfRange(f'j = {j} should lie in 0..{m} outside {spec.first}..{spec.last}')
    alpha, beta = float(params.alpha), float(params.beta)
    ratio = pochhammer_ratio([(k - j, m - k - l + 1), (alpha + l + 1, m - j), (beta + k + 1, j)],
                             [(1, i - k), (1, m - l - i), (alpha + l + 1, m - i), (beta + k + 1, i)])
    return (-1) ** (i - k) * math.comb(m, j) / math.comb(m, i) * ratio / (i - j)


def endpoint_derivative(curve, side, order):
    """The derivative of a given order of a Bezier curve at 0 or 1.

    Args:
        curve (BezierCurve): the curve.
        side (str): ``left`` for x = 0, ``right`` for x = 1.
        order (int): the derivative order, at most the degree.

    Returns:
        numpy.ndarray: a d-vector.

    Raises:
        UnsupportedOrder: if the order exceeds the degree.

    """
    _validate_side(side)
    m = curve.degree
    if not 0 <= order <= m:
        raise UnsupportedOrder(f'Derivative order {order} outside 0..{m}')
    offset = 0 if side == 'left' else m - order
    differences = np.array([(-1) ** (order + h) * math.comb(order, h) for h in range(order + 1)], dtype=float)
    return pochhammer(m - order + 1, order) * (differences @ curve.points[offset:offset + order + 1])


def _boundary_points(left, right, spec, dimension):
    """Control points fixed by the endpoint derivatives, forward substitution at each end."""
    m, k, l = spec.n, spec.k, spec.l  # noqa: E741
    points = np.zeros((m + 1, dimension))
    for i in range(k):
        correction = sum((-1) ** (i + j) * math.comb(i, j) * points[j] for j in range(i))
        points[i] = left[i] / pochhammer(m - i + 1, i) - correction
    for i in range(l):
        correction = sum((-1) ** j * math.comb(i, j) * points[m - i + j] for j in range(1, i + 1))
        points[m - i] = (-1) ** i * right[i] / pochhammer(m - i + 1, i) - correction
    return points


def solve_constrained(problem, table):
    """The degree m polynomial closest to the target with the first derivatives matched at the ends.

    The first k and last l control points follow from the endpoint derivatives
    of the target, the remaining ones from the dual coefficients applied to the
    Bernstein moments of the target, corrected for the fixed points.

    Args:
        problem (ApproxProblem): the target, the output space and the weight.
        table (CTable): the C-table of the output space and weight.

    Returns:
        BezierCurve: the minimizer, of degree m.

    Raises:
        DegreeMismatch: if the table was built for another space or weight.

    """
    spec, params = problem.spec, problem.params.as_float()
    if table.spec != spec or table.params != params:
        raise DegreeMismatch(f'Table built for {table.spec} with {table.params}, problem needs {spec} with {params}')
    moments = np.asarray(problem.target.moments(spec.n, params), dtype=float)
    dimension = moments.shape[1]
    left = problem.target.endpoint_derivatives('left', spec.k).reshape(spec.k, dimension)
    right = problem.target.endpoint_derivatives('right', spec.l).reshape(spec.l, dimension)
    points = _boundary_points(left, right, spec, dimension)
    interior = list(spec.indices)
    fixed = [j for j in range(spec.n + 1) if not spec.contains(j)]
    points[interior] = table.values @ moments[interior]
    if fixed:
        corrections = np.array([[kij(spec, params, i, j) for j in fixed] for i in interior])
        points[interior] -= corrections @ points[fixed]
    LOGGER.debug('Solved constrained approximation for %s with %s', spec, params)
    return BezierCurve(points)


def degree_reduce(curve, m, k=0, l=0, params=JacobiParams(), table=None):  # noqa: E741
    """Multi-degree reduction of a Bezier curve with endpoint derivative constraints.

    Args:
        curve (BezierCurve): the input of degree n.
        m (int): the output degree, at most n. m equal to n projects the curve
            onto the constrained space.
        k (int): derivatives of orders below k are preserved at 0.
        l (int): derivatives of orders below l are preserved at 1.
        params (JacobiParams): the weight of the norm.
        table (CTable): a prebuilt table for (m, k, l) and params, built on demand otherwise.

    Raises:
        InvalidParameters: if m > n or k + l > m.

    """
    if m > curve.degree:
        raise InvalidParameters(f'Target degree {m} exceeds the input degree {curve.degree}')
    spec = ConstraintSpec(m, k, l)
    if table is None:
        table = ctable_build(spec, params)
    return solve_constrained(ApproxProblem(PolynomialMoments(curve), spec, params), table)


def l2_error(curve, approximation, params=JacobiParams(), squared=False):
    """Distance ||f - P|| per dimension between two polynomial curves under the weighted norm.

    Uses ||f||^2 - 2 <f, P> + ||P||^2 with exact Bernstein inner products.
    """
    if curve.dimension != approximation.dimension:
        raise DegreeMismatch(f'Dimensions {curve.dimension} and {approximation.dimension} differ')
    n, m = curve.degree, approximation.degree
    f, p = curve.points, approximation.points
    result = (np.einsum('id,ij,jd->d', f, bernstein_gram(n, n, params), f)
              - 2 * np.einsum('id,ij,jd->d', f, bernstein_gram(n, m, params), p)
              + np.einsum('id,ij,jd->d', p, bernstein_gram(m, m, params), p))
    result = np.maximum(result, 0.0)
    return result if squared else np.sqrt(result)


@dataclass(frozen=True)
class RootEnclosure:
    """An interval [lower, upper] holding a root, unconverged when the iteration budget ran out."""

    lower: float
    upper: float
    converged: bool = True

    @property
    def root(self):
        """The midpoint of the enclosure."""
        return (self.lower + self.upper) / 2

    @property
    def width(self):
        """The length of the enclosure."""
        return self.upper - self.lower


class BezierClipper:
    """Root isolation of a scalar polynomial on [0, 1] by quadratic clipping.

    Each step reduces the polynomial restricted to the current interval to a
    quadratic q, bounds the reduction error by delta and keeps the parts of the
    interval where |q| <= delta. Steps that do not shrink the interval enough
    fall back to bisection. Wide enclosures left around multiple roots are
    narrowed through the derivative.
    """

    def __init__(self, poly, tolerance=DEFAULT_ROOT_TOLERANCE, max_iterations=DEFAULT_ROOT_MAX_ITERATIONS):
        self._logger = logging.getLogger(f'{LOGGER_BASENAME}.{self.__class__.__name__}')
        coefficients = poly.coefficients
        if not tolerance > 0:
            raise InvalidParameters(f'Tolerance should be positive, got {tolerance}')
        if isinstance(max_iterations, bool) or not isinstance(max_iterations, int) or max_iterations < 1:
            raise InvalidParameters(f'Iteration limit should be a positive integer, got {max_iterations!r}')
        self.poly = degree_elevate(BezierCurve(coefficients), max(poly.degree, CLIP_DEGREE))
        self.tolerance = tolerance
        self.max_iterations = max_iterations
        self._params = JacobiParams()
        self._table = ctable_build(ConstraintSpec(CLIP_DEGREE), self._params)
        self._noise = 4 * np.finfo(float).eps * (self.poly.degree + 1) * np.max(np.abs(coefficients))

    def _excludes_zero(self, coefficients):
        return np.all(coefficients > self._noise) or np.all(coefficients < -self._noise)

    def _strip(self, local):
        """Subintervals of [0, 1] where the reduced quadratic lies within its error bound of zero."""
        reduced = degree_reduce(local, CLIP_DEGREE, params=self._params, table=self._table)
        error = np.max(np.abs(degree_elevate(reduced, local.degree).coefficients - local.coefficients))
        delta = error + self._noise
        q0, q1, q2 = reduced.coefficients
        power = [q0 - 2 * q1 + q2, 2 * (q1 - q0), q0]
        breakpoints = {0.0, 1.0}
        for shift in (-delta, delta):
            for candidate in np.roots([power[0], power[1], power[2] + shift]):
                if abs(candidate.imag) <= 1e-12 and 0 < candidate.real < 1:
                    breakpoints.add(float(candidate.real))
        breakpoints = sorted(breakpoints)
        pieces = []
        for start, end in zip(breakpoints[:-1], breakpoints[1:]):
            if abs(np.polyval(power, (start + end) / 2)) > delta:
                continue
            if pieces and pieces[-1][1] == start:
                pieces[-1] = (pieces[-1][0], end)
            else:
                pieces.append((start, end))
        self._logger.debug('Reduction error %.3e leaves pieces %s', delta, pieces)
        return pieces

    def _next_intervals(self, lower, upper, local):
        coefficients = local.coefficients
        pieces = self._strip(local)
        if not pieces:
            if coefficients[0] * coefficients[-1] < 0:
                pieces = [(0.0, 1.0)]
            else:
                return []
        if len(pieces) == 1 and pieces[0][1] - pieces[0][0] > 1 - CLIP_MIN_SHRINK:
            start, end = pieces[0]
            middle = (start + end) / 2
            pieces = [(start, middle), (middle, end)]
        width = upper - lower
        return [(lower + start * width, lower + end * width) for start, end in pieces]

    def roots(self):
        """Runs the iteration over all subintervals of [0, 1].

        Returns:
            list: RootEnclosure objects sorted by position.

        """
        return self.roots_within(0.0, 1.0)

    def roots_within(self, lower, upper):
        """Runs the iteration over the subintervals of [lower, upper].

        Enclosures that stay wider than the tolerance after merging are handed
        to :meth:`_refine_multiple`.

        Returns:
            list: RootEnclosure objects sorted by position.

        """
        if not np.any(self.poly.coefficients):
            self._logger.warning('Polynomial vanishes identically, every point is a root')
            return [RootEnclosure(lower, upper, converged=False)]
        pending = [(lower, upper, 0)]
        found = []
        while pending:
            lower, upper, iteration = pending.pop()
            if upper <= lower:
                found.append(RootEnclosure(lower, lower))
                continue
            local = restrict(self.poly, lower, upper)
            if self._excludes_zero(local.coefficients):
                continue
            if upper - lower <= self.tolerance:
                found.append(RootEnclosure(lower, upper))
                continue
            if iteration >= self.max_iterations:
                self._logger.warning('Iteration limit reached on [%r, %r]', lower, upper)
                found.append(RootEnclosure(lower, upper, converged=False))
                continue
            for start, end in self._next_intervals(lower, upper, local):
                pending.append((start, min(max(end, start), upper), iteration + 1))
        return [refined for enclosure in self._coalesce(found) for refined in self._refine_multiple(enclosure)]

    def _derivative(self):
        return BezierCurve(self.poly.degree * np.diff(self.poly.coefficients))

    def _refine_multiple(self, enclosure):
        """Encloses a multiple root through the simple root of the derivative inside a wide enclosure.

        Near a root of multiplicity two or more the polynomial stays within the
        rounding noise over an interval much wider than the tolerance. A root of
        the derivative inside that interval where the polynomial itself is
        within the noise replaces the wide enclosure.
        """
        if enclosure.width <= self.tolerance:
            return [enclosure]
        derivative = BezierClipper(self._derivative(), self.tolerance, self.max_iterations)
        candidates = [candidate for candidate in derivative.roots_within(enclosure.lower, enclosure.upper)
                      if candidate.converged and abs(float(self.poly(candidate.root)[0])) <= self._noise]
        if not candidates:
            return [enclosure]
        self._logger.debug('Multiple root in [%r, %r] enclosed by %s', enclosure.lower, enclosure.upper, candidates)
        return candidates

    def _coalesce(self, enclosures):
        merged = []
        for enclosure in sorted(enclosures, key=lambda item: item.lower):
            if merged and enclosure.lower - merged[-1].upper <= self.tolerance:
                previous = merged.pop()
                enclosure = RootEnclosure(previous.lower,
                                          max(previous.upper, enclosure.upper),
                                          previous.converged and enclosure.converged)
            merged.append(enclosure)
        return merged


def clip_roots(poly, tol=DEFAULT_ROOT_TOLERANCE, max_iter=DEFAULT_ROOT_MAX_ITERATIONS):
    """Encloses the roots in [0, 1] of a scalar polynomial in Bernstein form.

    Args:
        poly (BezierCurve): a scalar polynomial.
        tol (float): the enclosure width aimed at.
        max_iter (int): the number of clipping steps allowed along one branch.

    Returns:
        list: RootEnclosure objects. Enclosures separated by at most tol are
            merged. A merged enclosure wider than tol around a multiple root is
            narrowed to the root of the derivative inside it.

    Raises:
        DegreeMismatch: if the curve is not scalar.
        InvalidParameters: if tol is not positive or max_iter is not a positive integer.

    """
    return BezierClipper(poly, tol, max_iter).roots()


def rational_endpoint_derivatives(rational, side, count):
    """Derivatives of orders 0..count-1 of a rational Bezier curve at 0 or 1 by the quotient rule.

    R^(j) = (N^(j) - sum_{h<j} binom(j, h) R^(h) W^(j-h)) / W

    Raises:
        UnsupportedOrder: if count exceeds the supported number of orders.

    """
    _validate_side(side)
    if count > MAX_RATIONAL_CONSTRAINT_ORDER:
        raise UnsupportedOrder(f'Rational endpoint derivatives are supported up to order '
                               f'{MAX_RATIONAL_CONSTRAINT_ORDER - 1}, {count} orders requested')
    numerator, denominator = rational.numerator, rational.denominator

    def derivative(curve, order):
        if order > curve.degree:
            return np.zeros(curve.dimension)
        return endpoint_derivative(curve, side, order)

    weight = derivative(denominator, 0)[0]
    derivatives = np.zeros((count, rational.dimension))
    for order in range(count):
        correction = sum(math.comb(order, h) * derivatives[h] * derivative(denominator, order - h)[0]
                         for h in range(order))
        derivatives[order] = (derivative(numerator, order) - correction) / weight
    return derivatives


def rational_moments(rational, m, params=JacobiParams(), nodes=None):
    """Inner products <R, B_j^m> of a rational Bezier curve, j = 0..m, by Gauss-Jacobi quadrature.

    Args:
        rational (RationalBezier): the curve.
        m (int): the degree of the Bernstein basis.
        params (JacobiParams): the weight of the inner product.
        nodes (int): quadrature size, 4 (n + m) by default.

    Returns:
        numpy.ndarray: an (m+1, d) array.

    """
    if nodes is None:
        nodes = max(QUADRATURE_NODES_PER_DEGREE * (rational.degree + m), 1)
    x, w = gauss_jacobi(nodes, params)
    numerator_basis = bernstein_basis_matrix(rational.degree, x)
    scaled = w / (numerator_basis @ rational.weights)
    integrals = numerator_basis.T @ (scaled[:, np.newaxis] * bernstein_basis_matrix(m, x))
    LOGGER.debug('Rational moments of degree %s with %s nodes', m, nodes)
    return integrals.T @ (rational.weights[:, np.newaxis] * rational.points)


def rational_approx(rational, m, k=0, l=0, params=JacobiParams(), nodes=None):  # noqa: E741
    """Polynomial approximation of degree m of a rational Bezier curve.

    Derivatives of orders below k at 0 and below l at 1 are matched.

    Raises:
        UnsupportedOrder: if k or l exceeds the supported constraint order.
        InvalidParameters: if k + l > m.

    """
    for name, value in (('k', k), ('l', l)):
        if value > MAX_RATIONAL_CONSTRAINT_ORDER:
            raise UnsupportedOrder(f'{name} = {value} exceeds {MAX_RATIONAL_CONSTRAINT_ORDER} for rational curves')
    spec = ConstraintSpec(m, k, l)
    problem = ApproxProblem(RationalMoments(rational, nodes), spec, params)
    return solve_constrained(problem, ctable_build(spec, params))
