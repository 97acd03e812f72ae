#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: oracle.py
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
Brute force references for the dual coefficients and the projections.

Gram matrices of the Bernstein basis are exact rationals once divided by
B(alpha+1, beta+1), for rational alpha and beta. Their inverses, computed by
Gauss-Jordan elimination over ``fractions.Fraction``, are the dual tables
scaled by the same factor. The floating point normal equations solver is the
reference for the constrained least squares solution.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
import math
from fractions import Fraction

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from .configuration import CONDITION_LIMIT, ORACLE_SIZE_LIMIT
from .dualbernsteinlibexceptions import (DegreeMismatch,
                                         IllConditioned,
                                         InvalidParameters,
                                         OracleSizeExceeded,
                                         SingularMatrix)
from .dualcore import ctable_values
from .specfun import JacobiParams, pochhammer

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
LOGGER_BASENAME = '''dualbernsteinlib.oracle'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())


def exact_params(alpha, beta):
    """Weight exponents as fractions.

    Args:
        alpha: an int, a Fraction or a string such as ``'1/2'``.
        beta: same as alpha.

    Raises:
        InvalidParameters: if a value is not rational or not greater than -1.

    """
    try:
        return JacobiParams(Fraction(alpha), Fraction(beta))
    except (TypeError, ValueError) as error:
        if isinstance(error, InvalidParameters):
            raise
        raise InvalidParameters(f'Exact exponents should be rational, got ({alpha!r}, {beta!r})') from error


def _check_size(spec):
    if spec.n - spec.k - spec.l > ORACLE_SIZE_LIMIT:
        raise OracleSizeExceeded(f'n - k - l = {spec.n - spec.k - spec.l} exceeds {ORACLE_SIZE_LIMIT}')


def beta_ratio_exact(alpha, beta, p, q):
    """B(alpha+p+1, beta+q+1) / B(alpha+1, beta+1) = (alpha+1)_p (beta+1)_q / (alpha+beta+2)_{p+q}."""
    params = exact_params(alpha, beta)
    return (pochhammer(params.alpha + 1, p) * pochhammer(params.beta + 1, q)
            / pochhammer(params.sigma + 1, p + q))


def gram_matrix_exact(spec, alpha, beta):
    """Gram matrix of B_k^n..B_{n-l}^n divided by B(alpha+1, beta+1), in exact arithmetic.

    Returns:
        numpy.ndarray: an object array of Fractions.

    Raises:
        OracleSizeExceeded: if n - k - l is above the size guard.

    """
    _check_size(spec)
    params = exact_params(alpha, beta)
    n = spec.n
    total = pochhammer(params.sigma + 1, 2 * n)
    return np.array([[Fraction(math.comb(n, i) * math.comb(n, j))
                      * pochhammer(params.alpha + 1, 2 * n - i - j)
                      * pochhammer(params.beta + 1, i + j) / total
                      for j in spec.indices] for i in spec.indices], dtype=object)


def identity_matrix(size):
    """The identity as an object array of Fractions."""
    return np.array([[Fraction(int(i == j)) for j in range(size)] for i in range(size)], dtype=object)


def invert_exact(matrix):
    """Inverse of a square matrix of Fractions by Gauss-Jordan elimination.

    Raises:
        DegreeMismatch: if the matrix is not square.
        SingularMatrix: if no nonzero pivot is left in some column.

    """
    matrix = np.array(matrix, dtype=object)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DegreeMismatch(f'Matrix of shape {matrix.shape} is not square')
    size = matrix.shape[0]
    augmented = np.hstack((matrix, identity_matrix(size)))
    for i in range(size):
        pivot = next((row for row in range(i, size) if augmented[row, i] != 0), None)
        if pivot is None:
            raise SingularMatrix(f'No pivot in column {i}')
        if pivot != i:
            augmented[[i, pivot]] = augmented[[pivot, i]]
        augmented[i, :] /= augmented[i, i]
        for row in range(i + 1, size):
            augmented[row, :] -= augmented[row, i] * augmented[i, :]
    for row in range(size - 2, -1, -1):
        for column in range(row + 1, size):
            augmented[row, :] -= augmented[row, column] * augmented[column, :]
    return augmented[:, size:]


def dual_table_exact(spec, alpha, beta):
    """The C-table times B(alpha+1, beta+1), as the exact inverse of :func:`gram_matrix_exact`."""
    LOGGER.debug('Exact dual table for %s with alpha=%s beta=%s', spec, alpha, beta)
    return invert_exact(gram_matrix_exact(spec, alpha, beta))


def ctable_exact(spec, alpha, beta):
    """The C-table recurrence replayed over Fractions, scaled like :func:`dual_table_exact`."""
    _check_size(spec)
    params = exact_params(alpha, beta)
    n, k, l = spec.n, spec.k, spec.l  # noqa: E741
    size = n - k - l
    anchor = ((-1) ** size * pochhammer(params.sigma + 2 * k + 2 * l + 1, size)
              / (math.factorial(size) * math.comb(n, k) * math.comb(n, l))
              / beta_ratio_exact(params.alpha, params.beta, 2 * l, 2 * k))
    return np.array(ctable_values(spec, params, Fraction(anchor)), dtype=object)


def normal_equations_solve(moments, gram, fixed=None):
    """Least squares coefficients from the normal equations by a pivoted LU solve.

    Args:
        moments: the inner products <f, B_j^m>, an (m+1,) or (m+1, d) array.
        gram: the (m+1) x (m+1) Gram matrix of the Bernstein basis.
        fixed (dict): index to value of the coefficients set by the constraints.
            They are moved to the right hand side and returned unchanged.

    Returns:
        numpy.ndarray: the coefficients, shaped like ``moments``.

    Raises:
        IllConditioned: if the condition estimate of the reduced system is above the limit.

    """
    moments = np.asarray(moments, dtype=float)
    gram = np.asarray(gram, dtype=float)
    if gram.shape != (moments.shape[0], moments.shape[0]):
        raise DegreeMismatch(f'Gram matrix of shape {gram.shape} does not match {moments.shape[0]} moments')
    fixed = fixed or {}
    if any(not 0 <= index < moments.shape[0] for index in fixed):
        raise InvalidParameters(f'Fixed indices {sorted(fixed)} outside 0..{moments.shape[0] - 1}')
    free = [index for index in range(moments.shape[0]) if index not in fixed]
    fixed_indices = sorted(fixed)
    result = np.zeros_like(moments)
    right_hand_side = moments[free]
    if fixed_indices:
        values = np.array([fixed[index] for index in fixed_indices], dtype=float).reshape(
            (len(fixed_indices),) + moments.shape[1:])
        result[fixed_indices] = values
        right_hand_side = right_hand_side - gram[np.ix_(free, fixed_indices)] @ values
    if not free:
        return result
    system = gram[np.ix_(free, free)]
    condition = np.linalg.cond(system)
    if not condition <= CONDITION_LIMIT:
        raise IllConditioned(condition, CONDITION_LIMIT)
    result[free] = lu_solve(lu_factor(system), right_hand_side)
    return result
