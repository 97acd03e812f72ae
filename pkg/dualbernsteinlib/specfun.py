#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: specfun.py
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
Scalar special function kernels.

Pochhammer symbols, the Beta function, Hahn polynomials, shifted Jacobi
polynomials and Gauss-Jacobi quadrature on [0, 1] for the weight
(1-x)^alpha x^beta. Hahn polynomials are summed as terminating hypergeometric
series, updating the previous term with the ratio of consecutive terms. The
shifted Jacobi polynomials come from the three-term recurrence behind
``scipy.special.eval_jacobi``.

The Pochhammer and Hahn kernels only use ``+ - * /`` on their arguments, so
they accept ``fractions.Fraction`` parameters as well as floats.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
import math
from dataclasses import dataclass
from numbers import Real

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import betaln, eval_jacobi, gammaln

from .configuration import POCHHAMMER_LOG_THRESHOLD
from .dualbernsteinlibexceptions import DomainError, InvalidParameters

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
LOGGER_BASENAME = '''dualbernsteinlib.specfun'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())


@dataclass(frozen=True)
class JacobiParams:
    """The exponents of the weight (1-x)^alpha x^beta of the inner product on [0, 1].

    Args:
        alpha (Real): exponent of (1-x), must be greater than -1.
        beta (Real): exponent of x, must be greater than -1.

    Raises:
        InvalidParameters: if any exponent is not greater than -1.

    """

    alpha: Real = 0
    beta: Real = 0

    def __post_init__(self):
        for name in ('alpha', 'beta'):
            value = getattr(self, name)
            if not isinstance(value, Real) or isinstance(value, bool):
                raise InvalidParameters(f'{name} should be a real number, got {value!r}')
            if not value > -1:
                raise InvalidParameters(f'{name} should be greater than -1, got {value}')

    @property
    def sigma(self):
        """alpha + beta + 1."""
        return self.alpha + self.beta + 1

    def shifted(self, alpha_shift=0, beta_shift=0):
        """Returns the parameters with the exponents increased by the provided shifts."""
        return JacobiParams(self.alpha + alpha_shift, self.beta + beta_shift)

    def as_float(self):
        """Returns the parameters with float exponents."""
        return JacobiParams(float(self.alpha), float(self.beta))


def _validate_order(k):
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 0:
        raise DomainError(f'Order should be a nonnegative integer, got {k!r}')


def pochhammer(c, k):
    """Rising factorial (c)_k = c (c+1) ... (c+k-1).

    Args:
        c: the base, any number type.
        k (int): nonnegative number of factors, (c)_0 is 1.

    Returns:
        The product, in the number type of ``c``.

    """
    _validate_order(k)
    # (c)_0 in the number type of c
    one = c * 0 + 1
    return math.prod((c + j for j in range(k)), start=one)


def log_pochhammer(c, k):
    """Sign and logarithm of the magnitude of (c)_k.

    Returns:
        tuple: (sign, log_magnitude), sign is 0 when a factor vanishes.

    """
    _validate_order(k)
    if k == 0:
        return 1, 0.0
    c = float(c)
    if c > 0:
        return 1, float(gammaln(c + k) - gammaln(c))
    sign = 1
    log_magnitude = 0.0
    for j in range(k):
        factor = c + j
        if factor == 0:
            return 0, -math.inf
        if factor < 0:
            sign = -sign
        log_magnitude += math.log(abs(factor))
    return sign, log_magnitude


def signed_exp(sign, log_magnitude):
    """Returns sign * exp(log_magnitude), saturating to an infinity instead of raising."""
    if sign == 0:
        return 0.0
    try:
        return math.copysign(math.exp(log_magnitude), sign)
    except OverflowError:
        return math.copysign(math.inf, sign)


def pochhammer_ratio(numerator, denominator=()):
    """Ratio of products of Pochhammer symbols.

    Plain arithmetic is used while every index is at most
    ``POCHHAMMER_LOG_THRESHOLD``, otherwise the ratio is assembled from log
    magnitudes and signs so that intermediate products do not overflow.

    Args:
        numerator (iterable): ``(c, k)`` pairs multiplied together.
        denominator (iterable): ``(c, k)`` pairs dividing the result.

    Returns:
        float: the ratio.

    """
    numerator = list(numerator)
    denominator = list(denominator)
    if max((k for _, k in numerator + denominator), default=0) <= POCHHAMMER_LOG_THRESHOLD:
        value = 1.0
        for c, k in numerator:
            value *= float(pochhammer(c, k))
        for c, k in denominator:
            value /= float(pochhammer(c, k))
        return value
    sign = 1
    log_magnitude = 0.0
    for c, k in numerator:
        term_sign, term_log = log_pochhammer(c, k)
        sign *= term_sign
        log_magnitude += term_log
    for c, k in denominator:
        term_sign, term_log = log_pochhammer(c, k)
        if term_sign == 0:
            raise ZeroDivisionError(f'Pochhammer symbol ({c})_{k} vanishes in a denominator')
        sign *= term_sign
        log_magnitude -= term_log
    return signed_exp(sign, log_magnitude)


def log_beta_fn(a, b):
    """Logarithm of the Beta function B(a, b), a and b positive."""
    if not (a > 0 and b > 0):
        raise DomainError(f'Beta function needs positive arguments, got ({a}, {b})')
    return float(betaln(float(a), float(b)))


def beta_fn(a, b):
    """Beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b).

    Computed through the logarithm of the Gamma function.

    Raises:
        DomainError: if a <= 0 or b <= 0.

    """
    return signed_exp(1, log_beta_fn(a, b))


def hahn_q(m, x, a, b, N):  # pylint: disable=invalid-name
    """Hahn polynomial Q_m(x; a, b, N) as the terminating 3F2 sum.

    Q_m(x; a, b, N) = sum_j (-m)_j (m+a+b+1)_j (-x)_j / (j! (a+1)_j (-N)_j)

    Args:
        m (int): the degree, 0 <= m <= N.
        x: the argument, number or numpy array.
        a: first parameter.
        b: second parameter.
        N (int): the length parameter.

    Raises:
        DomainError: if m > N, since (-N)_j vanishes inside the summation range.

    """
    _validate_order(m)
    _validate_order(N)
    if m > N:
        raise DomainError(f'Hahn polynomial degree {m} exceeds N = {N}')
    term = 1
    total = 1
    shift = m + a + b + 1
    for j in range(m):
        term = term * ((j - m) * (shift + j) * (j - x)) / ((j + 1) * (a + 1 + j) * (j - N))
        total = total + term
    if not m and np.ndim(x):
        total = total + 0 * np.asarray(x)
    return total


def shifted_jacobi(m, x, params):
    """Shifted Jacobi polynomial R_m^(alpha, beta)(x), orthogonal on [0, 1].

    R_m(x) = P_m^(alpha, beta)(2x - 1), evaluated by the three-term recurrence of
    the Jacobi polynomials. The value at x = 1 is (alpha+1)_m / m!.

    Args:
        m (int): the degree.
        x: the argument, number or numpy array.
        params (JacobiParams): the weight exponents.

    Returns:
        float or numpy.ndarray: the value, shaped like ``x``.

    """
    _validate_order(m)
    t = 2 * np.asarray(x, dtype=float) - 1
    values = eval_jacobi(int(m), float(params.alpha), float(params.beta), t)
    return values if np.ndim(values) else float(values)


def jacobi_norm_squared(m, params):
    """<R_m, R_m> under the weight (1-x)^alpha x^beta."""
    _validate_order(m)
    sigma = float(params.sigma)
    ratio = pochhammer_ratio([(params.alpha + 1, m), (params.beta + 1, m)], [(1, m)])
    # (2m/sigma + 1)(sigma)_m without the division by sigma.
    if m:
        ratio /= (2 * m + sigma) * pochhammer_ratio([(sigma + 1, m - 1)])
    return beta_fn(params.alpha + 1, params.beta + 1) * ratio


def gauss_jacobi(nodes, params):
    """Gauss-Jacobi nodes and weights on [0, 1] for the weight (1-x)^alpha x^beta.

    The Golub-Welsch approach: the nodes are the eigenvalues of the symmetric
    tridiagonal matrix built from the three-term recurrence of the monic Jacobi
    polynomials on [-1, 1], the weights follow from the first components of the
    normalized eigenvectors. The rule integrates polynomials of degree up to
    2 * nodes - 1 exactly.

    Args:
        nodes (int): the number of nodes, at least 1.
        params (JacobiParams): the weight exponents.

    Returns:
        tuple: (x, w) numpy arrays, x ascending.

    """
    if isinstance(nodes, bool) or not isinstance(nodes, (int, np.integer)) or nodes < 1:
        raise InvalidParameters(f'Quadrature needs at least one node, got {nodes!r}')
    a = float(params.alpha)
    b = float(params.beta)
    total_mass = beta_fn(a + 1, b + 1)
    diagonal = np.empty(nodes)
    diagonal[0] = (b - a) / (a + b + 2)
    if nodes == 1:
        return np.array([(1 + diagonal[0]) / 2]), np.array([total_mass])
    i = np.arange(1, nodes, dtype=float)
    diagonal[1:] = (b * b - a * a) / ((2 * i + a + b) * (2 * i + a + b + 2))
    off_diagonal = np.empty(nodes - 1)
    off_diagonal[0] = 4 * (a + 1) * (b + 1) / ((a + b + 2) ** 2 * (a + b + 3))
    i = i[1:]
    s = 2 * i + a + b
    off_diagonal[1:] = 4 * i * (i + a) * (i + b) * (i + a + b) / (s ** 2 * (s + 1) * (s - 1))
    eigenvalues, eigenvectors = eigh_tridiagonal(diagonal, np.sqrt(off_diagonal))
    LOGGER.debug('Computed %s Gauss-Jacobi nodes for %s', nodes, params)
    return (1 + eigenvalues) / 2, total_mass * eigenvectors[0, :] ** 2
