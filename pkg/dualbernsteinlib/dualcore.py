#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: dualcore.py
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
Bezier coefficients of the constrained dual Bernstein basis.

The dual polynomial D_i^(n,k,l) of the space of degree n polynomials whose
derivatives of order < k vanish at 0 and of order < l vanish at 1 is written as
sum_j C_ij B_j^n. The C-table is filled in O(n^2) operations: the first row
from a single closed form anchor and a backward ratio recursion, every further
row from the two previous ones through the five point cross rule. The rows are
accumulated in numpy.longdouble and rounded to double at the end. Three direct
formulas for the unconstrained coefficients are kept for cross validation.

Double precision is meaningful up to roughly n = 60 for moderate exponents,
the entries grow quickly with the degree and saturate to infinities far
beyond that.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .configuration import POCHHAMMER_LOG_THRESHOLD
from .dualbernsteinlibexceptions import DegreeMismatch, IndexOutOfRange, InvalidParameters
from .specfun import (JacobiParams,
                      beta_fn,
                      hahn_q,
                      log_beta_fn,
                      log_pochhammer,
                      pochhammer,
                      pochhammer_ratio,
                      signed_exp)

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
LOGGER_BASENAME = '''dualbernsteinlib.dualcore'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())


def _is_index(value):
    return isinstance(value, (int, np.integer)) and not isinstance(value, bool)


@dataclass(frozen=True)
class ConstraintSpec:
    """The degree n and the constraint orders k (at 0) and l (at 1) of a constrained space.

    Raises:
        InvalidParameters: if any value is not a nonnegative integer or k + l > n.

    """

    n: int
    k: int = 0
    l: int = 0  # noqa: E741

    def __post_init__(self):
        for name in ('n', 'k', 'l'):
            value = getattr(self, name)
            if not _is_index(value) or value < 0:
                raise InvalidParameters(f'{name} should be a nonnegative integer, got {value!r}')
        if self.k + self.l > self.n:
            raise InvalidParameters(f'k + l = {self.k + self.l} exceeds n = {self.n}')

    @property
    def first(self):
        """The smallest admissible index, k."""
        return self.k

    @property
    def last(self):
        """The largest admissible index, n - l."""
        return self.n - self.l

    @property
    def dimension(self):
        """Dimension n - k - l + 1 of the constrained space."""
        return self.n - self.k - self.l + 1

    @property
    def indices(self):
        """The admissible indices k..n-l."""
        return range(self.first, self.last + 1)

    def contains(self, index):
        """Whether the index lies in k..n-l."""
        return self.first <= index <= self.last

    def reduced(self):
        """The unconstrained spec of degree n - k - l."""
        return ConstraintSpec(self.n - self.k - self.l)


@dataclass(frozen=True, eq=False)
class CTable:
    """Bezier coefficients C_ij of the constrained dual basis.

    ``values`` is the dense square matrix of the admissible block, row and column
    ``0`` corresponding to the index k. Entries outside k..n-l are zero by
    convention and are served by :meth:`entry`.
    """

    spec: ConstraintSpec
    params: JacobiParams
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.shape != (self.spec.dimension, self.spec.dimension):
            raise DegreeMismatch(f'Table of shape {values.shape} does not match {self.spec}')
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)

    @property
    def indices(self):
        """The admissible indices on both axes."""
        return self.spec.indices

    def entry(self, i, j):
        """C_ij with the zero extension outside k..n-l."""
        if not (self.spec.contains(i) and self.spec.contains(j)):
            return 0.0
        return float(self.values[i - self.spec.k, j - self.spec.k])

    def row(self, i):
        """Coefficients C_ij for j = k..n-l of the dual polynomial with index i."""
        if not self.spec.contains(i):
            raise IndexOutOfRange(f'Row {i} outside {self.spec.first}..{self.spec.last}')
        return self.values[i - self.spec.k]

    def full_matrix(self):
        """The (n+1) x (n+1) matrix including the zero rows and columns."""
        matrix = np.zeros((self.spec.n + 1, self.spec.n + 1))
        block = slice(self.spec.first, self.spec.last + 1)
        matrix[block, block] = self.values
        return matrix


def _check_index(name, value, lower, upper):
    if not _is_index(value) or not lower <= value <= upper:
        raise IndexOutOfRange(f'{name} = {value!r} outside {lower}..{upper}')


def _log_binomial(n, k):
    return float(gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1))


def u_factor(spec, i):
    """U_i = binom(n-k-l, i-k) / binom(n, i), the scale between constrained and unconstrained duals."""
    _check_index('i', i, spec.first, spec.last)
    n, k, l = spec.n, spec.k, spec.l  # noqa: E741
    if n <= POCHHAMMER_LOG_THRESHOLD:
        return math.comb(n - k - l, i - k) / math.comb(n, i)
    return signed_exp(1, _log_binomial(n - k - l, i - k) - _log_binomial(n, i))


def _a_star(u, spec, beta):
    n, k = spec.n, spec.k
    assert u + 1 != 0
    return (u - n) * (u - k + 1) * (u + k + beta + 1) / (u + 1)


def _b_star(u, spec, alpha):
    n, l = spec.n, spec.l  # noqa: E741
    assert u - n - 1 != 0
    return u * (u - n - l - alpha - 1) * (u - n + l - 1) / (u - n - 1)


def ctable_anchor(spec, params):
    """C_{k,n-l}, the single closed form value the whole table is grown from."""
    n, k, l = spec.n, spec.k, spec.l  # noqa: E741
    size = n - k - l
    alpha, beta = float(params.alpha), float(params.beta)
    base = float(params.sigma) + 2 * k + 2 * l + 1
    if n <= POCHHAMMER_LOG_THRESHOLD:
        return ((-1) ** size * pochhammer(base, size) / math.factorial(size)
                / (math.comb(n, k) * math.comb(n, l))
                / beta_fn(alpha + 2 * l + 1, beta + 2 * k + 1))
    log_magnitude = (log_pochhammer(base, size)[1]
                     - float(gammaln(size + 1))
                     - _log_binomial(n, k)
                     - _log_binomial(n, l)
                     - log_beta_fn(alpha + 2 * l + 1, beta + 2 * k + 1))
    return signed_exp((-1) ** size, log_magnitude)


def first_row_values(spec, params, anchor):
    """Row k of the table from its last entry by the backward ratio recursion.

    Only field operations are used, so the row comes out in the number type of
    ``anchor`` and ``params``.
    """
    n, k, l = spec.n, spec.k, spec.l  # noqa: E741
    alpha, beta = params.alpha, params.beta
    row = [anchor] * spec.dimension
    for j in range(n - l - 1, k - 1, -1):
        ratio = ((j - n) * (j - k + 1) * (j + beta + k + 2)) / ((j + 1) * (j - n + l) * (j - alpha - l - n))
        row[j - k] = ratio * row[j - k + 1]
    return row


def ctable_values(spec, params, anchor, use_symmetry=False):
    """The C-table as nested lists, grown row by row with the cross rule.

    C_{i+1,j} = {(i-j)(2i+2j-2n-alpha+beta) C_ij + B*(j) C_{i,j-1}
                 + A*(j) C_{i,j+1} - B*(i) C_{i-1,j}} / A*(i)

    with entries outside k..n-l taken as zero. Works over floats and over
    ``fractions.Fraction``.

    Args:
        spec (ConstraintSpec): the constrained space.
        params (JacobiParams): the weight exponents.
        anchor: the value of C_{k,n-l}.
        use_symmetry (bool): when alpha == beta and k == l, only compute the
            rows up to ceil(n/2) and mirror the rest.

    Returns:
        list: ``dimension`` rows of ``dimension`` values.

    """
    n, k = spec.n, spec.k
    first, last = spec.first, spec.last
    alpha, beta = params.alpha, params.beta
    rows = [first_row_values(spec, params, anchor)]
    a_star = [_a_star(u, spec, beta) for u in range(first, last + 1)]
    b_star = [_b_star(u, spec, alpha) for u in range(first, last + 1)]
    symmetric = bool(use_symmetry) and alpha == beta and spec.k == spec.l
    last_computed = min(last, -(-n // 2)) if symmetric else last
    for i in range(first, last_computed):
        current = rows[i - k]
        previous = rows[i - k - 1] if i > first else None
        a_i = a_star[i - k]
        b_i = b_star[i - k]
        new_row = []
        for j in range(first, last + 1):
            value = (i - j) * (2 * i + 2 * j - 2 * n - alpha + beta) * current[j - k]
            if j > first:
                value += b_star[j - k] * current[j - k - 1]
            if j < last:
                value += a_star[j - k] * current[j - k + 1]
            if previous is not None:
                value -= b_i * previous[j - k]
            new_row.append(value / a_i)
        rows.append(new_row)
    for i in range(last_computed + 1, last + 1):
        mirror = rows[n - i - k]
        rows.append([mirror[n - j - k] for j in range(first, last + 1)])
    return rows


def ctable_first_row(spec, params):
    """C_kj for j = k..n-l, from C_{k,n-l} and the backward ratio recursion.

    Returns:
        numpy.ndarray: the first row of the C-table.

    """
    params = params.as_float()
    return np.array(first_row_values(spec, params, ctable_anchor(spec, params)), dtype=float)


def ctable_extended(spec, params, use_symmetry=False):
    """The C-table grown in ``numpy.longdouble``.

    :func:`ctable_build` rounds this table to double precision. The anchor is
    the double precision closed form, so the extended table carries its
    relative error as a common scale.

    Returns:
        numpy.ndarray: ``dimension`` x ``dimension`` extended precision values.

    """
    params = params.as_float()
    extended = JacobiParams(np.longdouble(params.alpha), np.longdouble(params.beta))
    anchor = np.longdouble(ctable_anchor(spec, params))
    with np.errstate(over='ignore', invalid='ignore'):
        rows = ctable_values(spec, extended, anchor, use_symmetry)
    return np.array(rows, dtype=np.longdouble)


def ctable_build(spec, params, use_symmetry=False):
    """Builds the C-table of the constrained dual basis in O(n^2) operations.

    Args:
        spec (ConstraintSpec): the constrained space.
        params (JacobiParams): the weight exponents.
        use_symmetry (bool): opt in to the halved computation when alpha == beta
            and k == l. Off by default so output does not depend on the regime.

    Returns:
        CTable: the immutable table.

    """
    params = params.as_float()
    LOGGER.debug('Building C-table for %s with %s, symmetry %s', spec, params, use_symmetry)
    with np.errstate(over='ignore', invalid='ignore'):
        values = ctable_extended(spec, params, use_symmetry).astype(float)
    if not np.all(np.isfinite(values)):
        LOGGER.warning('C-table for %s with %s has non finite entries, double precision range exceeded',
                       spec, params)
    return CTable(spec, params, values)


def ctable_start_closed_form(spec, params):
    """Row k of the C-table from its closed form W (-1)^j U_j / ((alpha+2l+1)_{n-l-j} (k+beta+2)_j).

    Evaluated entry by entry; kept as the check of :func:`ctable_first_row`.
    """
    n, k, l = spec.n, spec.k, spec.l  # noqa: E741
    alpha, beta = float(params.alpha), float(params.beta)
    size = n - k - l
    base = float(params.sigma) + 2 * k + 2 * l + 1
    scale = (-1) ** k / (math.comb(n, k) * beta_fn(alpha + 2 * l + 1, beta + 2 * k + 1))
    row = []
    for j in spec.indices:
        ratio = pochhammer_ratio([(base, size), (k + beta + 2, n - l)],
                                 [(1, size), (alpha + 2 * l + 1, n - l - j), (k + beta + 2, j)])
        row.append(scale * (-1) ** j * u_factor(spec, j) * ratio)
    return np.array(row)


def ctable_from_factorization(spec, params):
    """C_ij = U_i U_j c_{i-k,j-k}(n-k-l, alpha+2l, beta+2k), from the unconstrained table."""
    base = ctable_build(spec.reduced(), params.shifted(2 * spec.l, 2 * spec.k))
    scale = np.array([u_factor(spec, i) for i in spec.indices])
    return CTable(spec, params.as_float(), np.outer(scale, scale) * base.values)


def _dual_weight(m, params):
    """(2m/sigma+1) (beta+1)_m (sigma)_m / (m! (alpha+1)_m), without dividing by sigma."""
    if m == 0:
        return 1.0
    sigma = float(params.sigma)
    return (2 * m + sigma) * pochhammer_ratio([(sigma + 1, m - 1), (params.beta + 1, m)],
                                              [(1, m), (params.alpha + 1, m)])


def cij_direct(n, i, j, params):
    """c_ij(n, alpha, beta) as the sum over products of two Hahn polynomials."""
    _check_index('n', n, 0, math.inf)
    _check_index('i', i, 0, n)
    _check_index('j', j, 0, n)
    alpha, beta = float(params.alpha), float(params.beta)
    total = 0.0
    for m in range(n + 1):
        total += _dual_weight(m, params) * hahn_q(m, i, beta, alpha, n) * hahn_q(m, j, beta, alpha, n)
    return total / beta_fn(alpha + 1, beta + 1)


def cij_shifted(n, i, j, params):
    """c_ij(n, alpha, beta) as the (i+1)-term sum of Hahn polynomials with shifted parameters."""
    _check_index('n', n, 0, math.inf)
    _check_index('i', i, 0, n)
    _check_index('j', j, 0, n)
    alpha, beta = float(params.alpha), float(params.beta)
    prefactor = (-1) ** n * pochhammer_ratio([(params.sigma + 1, n), (-alpha - n, i)],
                                             [(1, n), (beta + 1, i)])
    ratio = 1.0
    total = 0.0
    for h in range(i + 1):
        total += ratio * hahn_q(n - h, n - j, alpha, beta + h + 1, n)
        if h < i:
            ratio *= (h - i) / (h - alpha - n)
    return prefactor * total / beta_fn(alpha + 1, beta + 1)


def _log_general_binomial(top, bottom):
    return float(gammaln(top + 1) - gammaln(bottom + 1) - gammaln(top - bottom + 1))


def cij_ra_oracle(n, i, j, params):
    """c_ij(n, alpha, beta) by the double binomial closed form with v_mh factors.

    Independent of the Hahn based routes; all binomials have positive Gamma
    arguments and are evaluated through log-gamma.
    """
    _check_index('n', n, 0, math.inf)
    _check_index('i', i, 0, n)
    _check_index('j', j, 0, n)
    alpha, beta = float(params.alpha), float(params.beta)
    sigma = alpha + beta + 1

    def log_v(m, h):
        return _log_general_binomial(n + beta + h + 1, n - m) + _log_general_binomial(n + alpha - h, n + alpha - m)

    scale = _log_binomial(n, i) + _log_binomial(n, j)
    total = 0.0
    for h in range(min(i, j) + 1):
        log_term = (math.log(2 * h + beta + 1)
                    + _log_general_binomial(n + sigma + h, n + beta + h + 1)
                    - _log_general_binomial(n + alpha - h, n - h)
                    + log_v(i, h) + log_v(j, h)
                    - scale)
        total += math.exp(log_term)
    return (-1) ** (i + j) * total
