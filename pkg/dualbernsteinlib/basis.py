#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: basis.py
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
Bernstein form polynomials and their relation to the shifted Jacobi basis.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import functools
import logging
import math
from dataclasses import dataclass

import numpy as np

from .dualbernsteinlibexceptions import DegreeMismatch, IndexOutOfRange, InvalidParameters
from .dualcore import u_factor
from .specfun import JacobiParams, beta_fn, hahn_q, pochhammer_ratio, shifted_jacobi

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
LOGGER_BASENAME = '''dualbernsteinlib.basis'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())


@dataclass(frozen=True, eq=False)
class BezierCurve:
    """A polynomial curve in Bernstein form.

    Args:
        points: n+1 control points. A flat sequence of numbers is a scalar
            polynomial, a sequence of d-vectors is a curve in d dimensions.

    """

    points: np.ndarray

    def __post_init__(self):
        points = np.array(self.points, dtype=float)
        if points.ndim == 1:
            points = points.reshape(-1, 1)
        if points.ndim != 2 or points.shape[0] < 1 or points.shape[1] < 1:
            raise DegreeMismatch(f'Control points of shape {points.shape} do not describe a curve')
        points.setflags(write=False)
        object.__setattr__(self, 'points', points)

    @property
    def degree(self):
        """The degree n, one less than the number of control points."""
        return self.points.shape[0] - 1

    @property
    def dimension(self):
        """The number of coordinates of each control point."""
        return self.points.shape[1]

    @property
    def is_scalar(self):
        """Whether the curve is a scalar polynomial."""
        return self.dimension == 1

    @property
    def coefficients(self):
        """The control points of a scalar polynomial as a flat array."""
        if not self.is_scalar:
            raise DegreeMismatch(f'Curve of dimension {self.dimension} is not scalar')
        return self.points[:, 0]

    def component(self, index):
        """The scalar polynomial of one coordinate."""
        return BezierCurve(self.points[:, index])

    def __call__(self, x):
        return de_casteljau_eval(self, x)

    def __repr__(self):
        return f'BezierCurve(degree={self.degree}, points={self.points.tolist()})'


@dataclass(frozen=True, eq=False)
class JacobiExpansion:
    """Coefficients a_0..a_n of a polynomial in the shifted Jacobi basis R_j^(alpha, beta)."""

    params: JacobiParams
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=float).ravel()
        if coeffs.size < 1:
            raise DegreeMismatch('A Jacobi expansion needs at least one coefficient')
        coeffs.setflags(write=False)
        object.__setattr__(self, 'coeffs', coeffs)

    @property
    def degree(self):
        """The degree of the expansion."""
        return self.coeffs.size - 1

    def __call__(self, x):
        return sum(coefficient * shifted_jacobi(j, x, self.params) for j, coefficient in enumerate(self.coeffs))


def de_casteljau_eval(curve, x):
    """Evaluates a Bezier curve by repeated linear interpolation.

    Args:
        curve (BezierCurve): the curve.
        x: a number, or a one dimensional array of parameters.

    Returns:
        numpy.ndarray: a d-vector for a number, an (len(x), d) array otherwise.

    """
    scalar_input = np.ndim(x) == 0
    parameters = np.atleast_1d(np.asarray(x, dtype=float))[:, np.newaxis, np.newaxis]
    values = np.repeat(curve.points[np.newaxis, :, :], parameters.shape[0], axis=0)
    for _ in range(curve.degree):
        values = (1 - parameters) * values[:, :-1, :] + parameters * values[:, 1:, :]
    values = values[:, 0, :]
    return values[0] if scalar_input else values


def degree_elevate(curve, degree):
    """Control points of the same curve written in Bernstein form of a higher degree."""
    if degree < curve.degree:
        raise DegreeMismatch(f'Cannot elevate a degree {curve.degree} curve to degree {degree}')
    points = curve.points
    for n in range(curve.degree, degree):
        ratio = (np.arange(1, n + 1) / (n + 1))[:, np.newaxis]
        interior = ratio * points[:-1] + (1 - ratio) * points[1:]
        points = np.vstack([points[:1], interior, points[-1:]])
    return BezierCurve(points)


def subdivide(curve, t):
    """Splits a curve at the parameter t into the pieces over [0, t] and [t, 1]."""
    points = curve.points.copy()
    left = [points[0]]
    right = [points[-1]]
    for _ in range(curve.degree):
        points = (1 - t) * points[:-1] + t * points[1:]
        left.append(points[0])
        right.append(points[-1])
    return BezierCurve(np.array(left)), BezierCurve(np.array(right[::-1]))


def restrict(curve, lower, upper):
    """The curve reparametrized so that [lower, upper] maps onto [0, 1]."""
    if not 0 <= lower < upper <= 1:
        raise InvalidParameters(f'Interval [{lower}, {upper}] is not a subinterval of [0, 1]')
    piece = curve if upper == 1 else subdivide(curve, upper)[0]
    if lower:
        piece = subdivide(piece, lower / upper)[1]
    return piece


def jacobi_to_bernstein(expansion, n):
    """Bernstein coefficients of degree n of a shifted Jacobi expansion.

    Uses R_i(x) = ((alpha+1)_i / i!) sum_j Q_i(n-j; alpha, beta, n) B_j^n(x).

    Raises:
        DegreeMismatch: if the expansion has a degree above n.

    """
    if expansion.degree > n:
        raise DegreeMismatch(f'Expansion of degree {expansion.degree} does not fit in degree {n}')
    params = expansion.params
    positions = n - np.arange(n + 1)
    coefficients = np.zeros(n + 1)
    for i, coefficient in enumerate(expansion.coeffs):
        scale = pochhammer_ratio([(params.alpha + 1, i)], [(1, i)])
        coefficients += coefficient * scale * hahn_q(i, positions, float(params.alpha), float(params.beta), n)
    return BezierCurve(coefficients)


def _bernstein_mass(n, params):
    """binom(n, i) (alpha+1)_{n-i} (beta+1)_i / (sigma+1)_n for i = 0..n."""
    return np.array([math.comb(n, i) * pochhammer_ratio([(params.alpha + 1, n - i), (params.beta + 1, i)],
                                                        [(params.sigma + 1, n)])
                     for i in range(n + 1)])


def _jacobi_weight(j, n, params):
    """(2j+sigma)(-n)_j (sigma+1)_{j-1} / ((alpha+1)_j (sigma+n+1)_j), the j = 0 value being 1."""
    if j == 0:
        return 1.0
    sigma = params.sigma
    return (2 * j + sigma) * pochhammer_ratio([(-n, j), (sigma + 1, j - 1)],
                                              [(params.alpha + 1, j), (sigma + n + 1, j)])


def bernstein_to_jacobi(curve, params):
    """Shifted Jacobi coefficients of a scalar Bernstein form polynomial.

    Raises:
        DegreeMismatch: if the curve is not scalar.

    """
    coefficients = curve.coefficients
    n = curve.degree
    indices = np.arange(n + 1)
    weighted = coefficients * _bernstein_mass(n, params)
    alpha, beta = float(params.alpha), float(params.beta)
    result = np.array([_jacobi_weight(j, n, params) * np.dot(weighted, hahn_q(j, indices, beta, alpha, n))
                       for j in range(n + 1)])
    return JacobiExpansion(params, result)


def _dual_jacobi_weight(j, params):
    """(2j/sigma + 1)(sigma)_j / (alpha+1)_j, written without the division by sigma."""
    if j == 0:
        return 1.0
    return (2 * j + params.sigma) * pochhammer_ratio([(params.sigma + 1, j - 1)], [(params.alpha + 1, j)])


def _check_index(name, value, lower, upper):
    if not lower <= value <= upper:
        raise IndexOutOfRange(f'{name} = {value} outside {lower}..{upper}')


def dual_jacobi_coeffs(n, i, params):
    """Coefficients of the dual Bernstein polynomial D_i^n in the shifted Jacobi basis."""
    _check_index('i', i, 0, n)
    alpha, beta = float(params.alpha), float(params.beta)
    coefficients = [(-1) ** j * _dual_jacobi_weight(j, params) * hahn_q(j, i, beta, alpha, n)
                    for j in range(n + 1)]
    return JacobiExpansion(params, np.array(coefficients) / beta_fn(alpha + 1, beta + 1))


def dual_short_eval(n, i, params, x):
    """Evaluates D_i^n(x; alpha, beta) through the (i+1)-term sum of Jacobi polynomials.

    D_i^n = (-1)^(n-i) (sigma+1)_n / (B(alpha+1, beta+1) (alpha+1)_{n-i} (beta+1)_i)
            * sum_h (-i)_h / (-n)_h R_{n-h}^(alpha, beta+h+1)
    """
    _check_index('i', i, 0, n)
    alpha, beta = float(params.alpha), float(params.beta)
    prefactor = (-1) ** (n - i) * pochhammer_ratio([(params.sigma + 1, n)],
                                                   [(alpha + 1, n - i), (beta + 1, i)])
    ratio = 1.0
    total = 0.0
    for h in range(i + 1):
        total = total + ratio * shifted_jacobi(n - h, x, JacobiParams(alpha, beta + h + 1))
        if h < i:
            ratio *= (h - i) / (h - n)
    return prefactor * total / beta_fn(alpha + 1, beta + 1)


def constrained_dual_eval(spec, i, params, x):
    """Evaluates D_i^(n,k,l)(x) = U_i x^k (1-x)^l D_{i-k}^{n-k-l}(x; alpha+2l, beta+2k)."""
    _check_index('i', i, spec.first, spec.last)
    x = np.asarray(x, dtype=float)
    shifted = params.shifted(2 * spec.l, 2 * spec.k)
    value = dual_short_eval(spec.n - spec.k - spec.l, i - spec.k, shifted, x)
    return u_factor(spec, i) * x ** spec.k * (1 - x) ** spec.l * value


def bernstein_inner(n, i, m, j, params):
    """Weighted inner product <B_i^n, B_j^m>.

    B(alpha+1, beta+1) binom(n,i) binom(m,j) (alpha+1)_{n+m-i-j} (beta+1)_{i+j} / (sigma+1)_{n+m}
    """
    _check_index('i', i, 0, n)
    _check_index('j', j, 0, m)
    ratio = pochhammer_ratio([(params.alpha + 1, n + m - i - j), (params.beta + 1, i + j)],
                             [(params.sigma + 1, n + m)])
    return beta_fn(params.alpha + 1, params.beta + 1) * math.comb(n, i) * math.comb(m, j) * ratio


def bernstein_basis_matrix(n, x):
    """Values B_i^n(x) as a (len(x), n+1) matrix."""
    x = np.atleast_1d(np.asarray(x, dtype=float))[:, np.newaxis]
    i = np.arange(n + 1)
    binomials = np.array([math.comb(n, index) for index in i], dtype=float)
    return binomials * x ** i * (1 - x) ** (n - i)


@functools.lru_cache(maxsize=128)
def bernstein_gram(n, m, params):
    """The (n+1) x (m+1) matrix of inner products <B_i^n, B_j^m>, cached and read only."""
    gram = np.array([[bernstein_inner(n, i, m, j, params) for j in range(m + 1)] for i in range(n + 1)])
    gram.setflags(write=False)
    return gram


