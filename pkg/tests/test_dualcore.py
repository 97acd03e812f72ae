#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_dualcore.py
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
test_dualcore
----------------------------------
Tests for `dualbernsteinlib.dualcore` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import itertools
import math
import time
import unittest

import numpy as np

from dualbernsteinlib.dualbernsteinlibexceptions import DegreeMismatch, IndexOutOfRange, InvalidParameters
from dualbernsteinlib.dualcore import (ConstraintSpec,
                                       CTable,
                                       cij_direct,
                                       cij_ra_oracle,
                                       cij_shifted,
                                       ctable_build,
                                       ctable_extended,
                                       ctable_first_row,
                                       ctable_from_factorization,
                                       ctable_start_closed_form,
                                       u_factor)
from dualbernsteinlib.specfun import JacobiParams, beta_fn, pochhammer

__author__ = '''Costas Tyfoxylos <costas.tyf@gmail.com>'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<costas.tyf@gmail.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

EXPONENTS = (-0.5, 0.0, 1.0, 2.5)
PARAMETER_GRID = [JacobiParams(alpha, beta) for alpha, beta in itertools.product(EXPONENTS, EXPONENTS)]


def constraint_grid(max_degree, max_constraints=4):
    for n in range(max_degree + 1):
        for k in range(min(n, max_constraints) + 1):
            for l in range(min(n, max_constraints) - k + 1):  # noqa: E741
                yield ConstraintSpec(n, k, l)


def assert_close_to_scale(test, actual, expected, tolerance):
    actual = np.asarray(actual, dtype=float)
    expected = np.asarray(expected, dtype=float)
    scale = max(np.max(np.abs(expected)), 1.0)
    test.assertLessEqual(np.max(np.abs(actual - expected)), tolerance * scale)


def extended_gram(spec, params):
    """<B_i^n, B_j^n> on the admissible indices from the Beta function closed form, in numpy.longdouble."""
    n = spec.n
    alpha, beta = np.longdouble(params.alpha), np.longdouble(params.beta)
    total = pochhammer(alpha + beta + 2, 2 * n)
    scale = np.longdouble(beta_fn(params.alpha + 1, params.beta + 1))
    return np.array([[math.comb(n, i) * math.comb(n, j) * scale
                      * pochhammer(alpha + 1, 2 * n - i - j) * pochhammer(beta + 1, i + j) / total
                      for j in spec.indices] for i in spec.indices], dtype=np.longdouble)


def duality_residual(values, spec, params):
    """max |sum_j C_ij <B_j, B_m> - delta_im|, accumulated in numpy.longdouble."""
    product = np.asarray(values, dtype=np.longdouble) @ extended_gram(spec, params)
    return float(np.max(np.abs(product - np.eye(spec.dimension, dtype=np.longdouble))))


class TestConstraintSpec(unittest.TestCase):

    def test_accessors(self):
        spec = ConstraintSpec(6, 2, 1)
        self.assertEqual((spec.first, spec.last, spec.dimension), (2, 5, 4))
        self.assertEqual(list(spec.indices), [2, 3, 4, 5])
        self.assertTrue(spec.contains(5))
        self.assertFalse(spec.contains(6))
        self.assertEqual(spec.reduced(), ConstraintSpec(3))

    def test_rejects_empty_spaces(self):
        with self.assertRaises(InvalidParameters):
            ConstraintSpec(2, 2, 1)
        with self.assertRaises(InvalidParameters):
            ConstraintSpec(-1)
        with self.assertRaises(InvalidParameters):
            ConstraintSpec(3, 1.0, 0)


class TestUFactor(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(u_factor(ConstraintSpec(2, 1, 1), 1), 0.5)
        for i in range(6):
            self.assertEqual(u_factor(ConstraintSpec(5), i), 1.0)
        self.assertEqual(u_factor(ConstraintSpec(3, 1, 0), 3), 1.0)

    def test_large_degree_uses_logarithms(self):
        self.assertAlmostEqual(u_factor(ConstraintSpec(40, 1, 1), 20) * 40 * 39 / (20 * 20), 1.0, places=12)

    def test_index_outside_range(self):
        with self.assertRaises(IndexOutOfRange):
            u_factor(ConstraintSpec(3, 1, 1), 0)


class TestFirstRow(unittest.TestCase):

    def test_examples(self):
        np.testing.assert_allclose(ctable_first_row(ConstraintSpec(1), JacobiParams()), [4.0, -2.0], rtol=1e-14)
        np.testing.assert_allclose(ctable_first_row(ConstraintSpec(2, 1, 1), JacobiParams()), [7.5], rtol=1e-14)
        np.testing.assert_allclose(ctable_first_row(ConstraintSpec(0), JacobiParams()), [1.0], rtol=1e-14)

    def test_matches_the_closed_form(self):
        for spec in constraint_grid(10, 3):
            for params in PARAMETER_GRID[::3]:
                np.testing.assert_allclose(ctable_first_row(spec, params),
                                           ctable_start_closed_form(spec, params),
                                           rtol=1e-11)


class TestTable(unittest.TestCase):

    def test_examples(self):
        np.testing.assert_allclose(ctable_build(ConstraintSpec(1), JacobiParams()).values,
                                   [[4, -2], [-2, 4]], rtol=1e-13)
        np.testing.assert_allclose(ctable_build(ConstraintSpec(2, 1, 1), JacobiParams()).values,
                                   [[7.5]], rtol=1e-14)

    def test_weighted_example(self):
        np.testing.assert_allclose(ctable_build(ConstraintSpec(1), JacobiParams(1, 0)).values,
                                   [[6, -6], [-6, 18]], rtol=1e-13)

    def test_values_are_read_only(self):
        table = ctable_build(ConstraintSpec(3), JacobiParams())
        with self.assertRaises(ValueError):
            table.values[0, 0] = 1.0

    def test_zero_extension_and_rows(self):
        table = ctable_build(ConstraintSpec(4, 1, 1), JacobiParams())
        self.assertEqual(table.entry(0, 2), 0.0)
        self.assertEqual(table.entry(2, 4), 0.0)
        self.assertEqual(table.entry(1, 3), table.values[0, 2])
        np.testing.assert_array_equal(table.row(2), table.values[1])
        with self.assertRaises(IndexOutOfRange):
            table.row(4)
        full = table.full_matrix()
        self.assertEqual(full.shape, (5, 5))
        self.assertEqual(full[0].tolist(), [0.0] * 5)

    def test_shape_is_checked(self):
        with self.assertRaises(DegreeMismatch):
            CTable(ConstraintSpec(2), JacobiParams(), np.eye(2))

    def test_table_is_symmetric(self):
        for spec in constraint_grid(9, 3):
            values = ctable_build(spec, JacobiParams(1.0, 2.5)).values
            assert_close_to_scale(self, values, values.T, 1e-11)

    def test_unconstrained_table_matches_the_direct_formula(self):
        table = ctable_build(ConstraintSpec(5), JacobiParams(0.5, -0.5))
        direct = [[cij_direct(5, i, j, JacobiParams(0.5, -0.5)) for j in range(6)] for i in range(6)]
        assert_close_to_scale(self, table.values, direct, 1e-11)

    def test_duality(self):
        for params in PARAMETER_GRID:
            for spec in constraint_grid(12):
                residual = duality_residual(ctable_build(spec, params).values, spec, params)
                self.assertLessEqual(residual, 1e-8, f'{spec} {params}')

    def test_duality_of_the_extended_table(self):
        for params in PARAMETER_GRID:
            for spec in constraint_grid(14):
                residual = duality_residual(ctable_extended(spec, params), spec, params)
                self.assertLessEqual(residual, 1e-8, f'{spec} {params}')

    def test_extended_table_rounds_to_the_built_table(self):
        spec = ConstraintSpec(9, 1, 2)
        params = JacobiParams(-0.5, 2.5)
        extended = ctable_extended(spec, params)
        self.assertEqual(extended.dtype, np.longdouble)
        np.testing.assert_array_equal(extended.astype(float), ctable_build(spec, params).values)

    def test_factorization(self):
        for params in PARAMETER_GRID:
            for spec in constraint_grid(14):
                np.testing.assert_allclose(ctable_build(spec, params).values,
                                           ctable_from_factorization(spec, params).values,
                                           rtol=1e-10, atol=0, err_msg=f'{spec} {params}')

    def test_symmetry_of_symmetric_weights(self):
        for alpha in (0.0, 1.0):
            params = JacobiParams(alpha, alpha)
            for k in (0, 1, 2):
                for n in range(2 * k, 13):
                    values = ctable_build(ConstraintSpec(n, k, k), params).values
                    np.testing.assert_allclose(values, values[::-1, ::-1], rtol=1e-12, atol=0,
                                               err_msg=f'n={n} k=l={k} alpha=beta={alpha}')

    def test_symmetry_shortcut(self):
        params = JacobiParams(0.5, 0.5)
        spec = ConstraintSpec(6, 1, 1)
        mirrored = ctable_build(spec, params, use_symmetry=True).values
        np.testing.assert_array_equal(mirrored[3:], mirrored[:2][::-1, ::-1])
        assert_close_to_scale(self, mirrored, ctable_build(spec, params).values, 1e-11)

    def test_shortcut_is_ignored_for_unequal_exponents(self):
        params = JacobiParams(0.5, 1.0)
        spec = ConstraintSpec(5, 1, 1)
        np.testing.assert_array_equal(ctable_build(spec, params, use_symmetry=True).values,
                                      ctable_build(spec, params).values)

    def test_build_time_grows_quadratically(self):
        params = JacobiParams()
        sizes = (256, 512, 1024)
        timings = []
        for n in sizes:
            best = float('inf')
            for _ in range(2):
                start = time.perf_counter()
                ctable_build(ConstraintSpec(n), params)
                best = min(best, time.perf_counter() - start)
            timings.append(best)
        exponent = np.polyfit(np.log(sizes), np.log(timings), 1)[0]
        self.assertGreaterEqual(exponent, 1.7)
        self.assertLessEqual(exponent, 2.4)


class TestDirectFormulas(unittest.TestCase):

    def test_direct_examples(self):
        params = JacobiParams()
        self.assertAlmostEqual(cij_direct(1, 0, 0, params), 4.0, places=13)
        self.assertAlmostEqual(cij_direct(1, 0, 1, params), -2.0, places=13)
        self.assertAlmostEqual(cij_direct(0, 0, 0, JacobiParams(2, 2)), 30.0, places=11)

    def test_shifted_examples(self):
        params = JacobiParams()
        self.assertAlmostEqual(cij_shifted(1, 0, 0, params), 4.0, places=13)
        self.assertAlmostEqual(cij_shifted(1, 1, 1, params), 4.0, places=13)
        self.assertAlmostEqual(cij_shifted(2, 0, 2, params), cij_direct(2, 0, 2, params), places=12)

    def test_shifted_formula_at_the_last_index(self):
        for params in (JacobiParams(), JacobiParams(0, 1.5), JacobiParams(1, 0)):
            for n in range(1, 8):
                row = [cij_shifted(n, n, j, params) for j in range(n + 1)]
                assert_close_to_scale(self, row, [cij_direct(n, n, j, params) for j in range(n + 1)], 1e-10)

    def test_oracle_examples(self):
        params = JacobiParams()
        self.assertAlmostEqual(cij_ra_oracle(1, 0, 0, params), 4.0, places=12)
        self.assertAlmostEqual(cij_ra_oracle(1, 0, 1, params), -2.0, places=12)
        params = JacobiParams(1, 0.5)
        self.assertAlmostEqual(cij_ra_oracle(3, 2, 1, params) / cij_direct(3, 2, 1, params), 1.0, places=12)

    def test_index_errors(self):
        for formula in (cij_direct, cij_shifted, cij_ra_oracle):
            with self.assertRaises(IndexOutOfRange):
                formula(2, 3, 0, JacobiParams())

    def test_four_way_agreement(self):
        for params in PARAMETER_GRID:
            for n in range(13):
                table = ctable_build(ConstraintSpec(n), params).values
                direct = np.array([[cij_direct(n, i, j, params) for j in range(n + 1)] for i in range(n + 1)])
                shifted = np.array([[cij_shifted(n, i, j, params) for j in range(n + 1)] for i in range(n + 1)])
                oracle = np.array([[cij_ra_oracle(n, i, j, params) for j in range(n + 1)] for i in range(n + 1)])
                for first, second in itertools.combinations((table, direct, shifted, oracle), 2):
                    assert_close_to_scale(self, first, second, 1e-9)
