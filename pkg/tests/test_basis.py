#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_basis.py
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
test_basis
----------------------------------
Tests for `dualbernsteinlib.basis` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import unittest

import numpy as np

from dualbernsteinlib.basis import (BezierCurve,
                                    JacobiExpansion,
                                    bernstein_basis_matrix,
                                    bernstein_inner,
                                    bernstein_to_jacobi,
                                    constrained_dual_eval,
                                    de_casteljau_eval,
                                    degree_elevate,
                                    dual_jacobi_coeffs,
                                    dual_short_eval,
                                    jacobi_to_bernstein,
                                    restrict,
                                    subdivide)
from dualbernsteinlib.dualbernsteinlibexceptions import DegreeMismatch, IndexOutOfRange, InvalidParameters
from dualbernsteinlib.dualcore import ConstraintSpec, ctable_build
from dualbernsteinlib.specfun import JacobiParams, beta_fn, gauss_jacobi

__author__ = '''Costas Tyfoxylos <costas.tyf@gmail.com>'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<costas.tyf@gmail.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

SAMPLE_PARAMETERS = (JacobiParams(), JacobiParams(1, 0.5), JacobiParams(-0.5, 2))


class TestBezierCurve(unittest.TestCase):

    def setUp(self):
        self.random = np.random.default_rng(20261018)

    def test_scalar_and_vector_curves(self):
        scalar = BezierCurve([0, 1, 0])
        self.assertEqual((scalar.degree, scalar.dimension, scalar.is_scalar), (2, 1, True))
        np.testing.assert_array_equal(scalar.coefficients, [0, 1, 0])
        planar = BezierCurve([[0, 0], [1, 2], [3, 1]])
        self.assertEqual((planar.degree, planar.dimension), (2, 2))
        np.testing.assert_array_equal(planar.component(1).coefficients, [0, 2, 1])
        with self.assertRaises(DegreeMismatch):
            planar.coefficients

    def test_rejects_empty_curves(self):
        with self.assertRaises(DegreeMismatch):
            BezierCurve([])

    def test_evaluation_examples(self):
        self.assertAlmostEqual(de_casteljau_eval(BezierCurve([0, 1]), 0.25)[0], 0.25, places=15)
        self.assertAlmostEqual(BezierCurve([0, 1, 0])(0.5)[0], 0.5, places=15)
        curve = BezierCurve([[1, 2], [5, -1], [0, 4], [3, 3]])
        np.testing.assert_array_equal(curve(0), [1, 2])
        np.testing.assert_array_equal(curve(1), [3, 3])
        self.assertEqual(curve(np.linspace(0, 1, 7)).shape, (7, 2))

    def test_partition_of_unity(self):
        x = self.random.random(50)
        for n in range(21):
            values = de_casteljau_eval(BezierCurve(np.ones(n + 1)), x)
            self.assertLessEqual(np.max(np.abs(values - 1)), 1e-13)

    def test_basis_matrix_matches_evaluation(self):
        x = np.linspace(0, 1, 9)
        points = self.random.random(6)
        np.testing.assert_allclose(bernstein_basis_matrix(5, x) @ points,
                                   de_casteljau_eval(BezierCurve(points), x)[:, 0],
                                   rtol=1e-13, atol=1e-14)

    def test_degree_elevation_keeps_the_curve(self):
        curve = BezierCurve(self.random.random((4, 2)))
        elevated = degree_elevate(curve, 9)
        self.assertEqual(elevated.degree, 9)
        x = np.linspace(0, 1, 13)
        np.testing.assert_allclose(elevated(x), curve(x), rtol=1e-13, atol=1e-14)
        with self.assertRaises(DegreeMismatch):
            degree_elevate(curve, 2)

    def test_subdivision_and_restriction(self):
        curve = BezierCurve(self.random.random(6))
        left, right = subdivide(curve, 0.3)
        x = np.linspace(0, 1, 11)
        np.testing.assert_allclose(left(x), curve(0.3 * x), rtol=1e-12, atol=1e-14)
        np.testing.assert_allclose(right(x), curve(0.3 + 0.7 * x), rtol=1e-12, atol=1e-14)
        piece = restrict(curve, 0.2, 0.45)
        np.testing.assert_allclose(piece(x), curve(0.2 + 0.25 * x), rtol=1e-12, atol=1e-14)
        with self.assertRaises(InvalidParameters):
            restrict(curve, 0.5, 0.5)


class TestConversions(unittest.TestCase):

    def test_jacobi_to_bernstein_examples(self):
        for params in SAMPLE_PARAMETERS:
            constant = jacobi_to_bernstein(JacobiExpansion(params, [1]), 4)
            np.testing.assert_allclose(constant.coefficients, np.ones(5), rtol=1e-14)
        np.testing.assert_allclose(jacobi_to_bernstein(JacobiExpansion(JacobiParams(), [0, 1]), 1).coefficients,
                                   [-1, 1], atol=1e-15)
        np.testing.assert_allclose(jacobi_to_bernstein(JacobiExpansion(JacobiParams(), [0, 0, 1]), 2).coefficients,
                                   [1, -2, 1], atol=1e-14)

    def test_jacobi_to_bernstein_rejects_high_degrees(self):
        with self.assertRaises(DegreeMismatch):
            jacobi_to_bernstein(JacobiExpansion(JacobiParams(), [1, 2, 3]), 1)

    def test_bernstein_to_jacobi_examples(self):
        np.testing.assert_allclose(bernstein_to_jacobi(BezierCurve([1, 0]), JacobiParams()).coeffs,
                                   [0.5, -0.5], atol=1e-15)
        for params in SAMPLE_PARAMETERS:
            expansion = bernstein_to_jacobi(BezierCurve([2.5] * 5), params)
            np.testing.assert_allclose(expansion.coeffs, [2.5, 0, 0, 0, 0], atol=1e-12)

    def test_bernstein_to_jacobi_needs_a_scalar_curve(self):
        with self.assertRaises(DegreeMismatch):
            bernstein_to_jacobi(BezierCurve([[0, 1], [1, 0]]), JacobiParams())

    def test_round_trip(self):
        random = np.random.default_rng(7)
        for params in SAMPLE_PARAMETERS:
            for n in range(11):
                points = random.random(n + 1)
                expansion = bernstein_to_jacobi(BezierCurve(points), params)
                np.testing.assert_allclose(jacobi_to_bernstein(expansion, n).coefficients, points, atol=1e-12)

    def test_expansion_evaluates_like_the_curve(self):
        params = JacobiParams(1, 0.5)
        curve = BezierCurve([0.3, -1, 2, 0.5])
        x = np.linspace(0, 1, 5)
        np.testing.assert_allclose(bernstein_to_jacobi(curve, params)(x), curve(x)[:, 0], atol=1e-12)


class TestDualPolynomials(unittest.TestCase):

    def test_jacobi_coefficients_examples(self):
        np.testing.assert_allclose(dual_jacobi_coeffs(1, 0, JacobiParams()).coeffs, [1, -3], atol=1e-14)
        np.testing.assert_allclose(dual_jacobi_coeffs(1, 1, JacobiParams()).coeffs, [1, 3], atol=1e-14)
        for params in SAMPLE_PARAMETERS:
            np.testing.assert_allclose(dual_jacobi_coeffs(0, 0, params).coeffs,
                                       [1 / beta_fn(params.alpha + 1, params.beta + 1)], rtol=1e-13)

    def test_index_errors(self):
        with self.assertRaises(IndexOutOfRange):
            dual_jacobi_coeffs(2, 3, JacobiParams())
        with self.assertRaises(IndexOutOfRange):
            dual_short_eval(2, -1, JacobiParams(), 0.5)
        with self.assertRaises(IndexOutOfRange):
            constrained_dual_eval(ConstraintSpec(3, 1, 1), 3, JacobiParams(), 0.5)

    def test_short_form_examples(self):
        self.assertAlmostEqual(dual_short_eval(1, 0, JacobiParams(), 0), 4.0, places=13)
        self.assertAlmostEqual(dual_short_eval(1, 0, JacobiParams(), 1), -2.0, places=13)

    def test_short_form_matches_the_jacobi_expansion(self):
        x = np.random.default_rng(3).random(8)
        for params in SAMPLE_PARAMETERS:
            for n in range(11):
                for i in range(n + 1):
                    short = dual_short_eval(n, i, params, x)
                    expansion = dual_jacobi_coeffs(n, i, params)(x)
                    scale = max(np.max(np.abs(expansion)), 1.0)
                    self.assertLessEqual(np.max(np.abs(short - expansion)), 1e-10 * scale)

    def test_constrained_examples(self):
        spec = ConstraintSpec(2, 1, 1)
        self.assertAlmostEqual(constrained_dual_eval(spec, 1, JacobiParams(), 0.5), 3.75, places=12)
        spec = ConstraintSpec(5, 2, 1)
        for i in spec.indices:
            self.assertEqual(constrained_dual_eval(spec, i, JacobiParams(), 0.0), 0.0)
            self.assertEqual(constrained_dual_eval(spec, i, JacobiParams(), 1.0), 0.0)

    def test_duality_by_quadrature(self):
        for params in SAMPLE_PARAMETERS:
            x, w = gauss_jacobi(200, params)
            for n in range(11):
                basis = bernstein_basis_matrix(n, x)
                for k in range(min(n, 3) + 1):
                    for l in range(min(n, 3) - k + 1):  # noqa: E741
                        spec = ConstraintSpec(n, k, l)
                        for i in spec.indices:
                            dual = constrained_dual_eval(spec, i, params, x)
                            integrals = (w * dual) @ basis
                            expected = np.zeros(n + 1)
                            expected[i] = 1.0
                            self.assertLessEqual(np.max(np.abs(integrals[list(spec.indices)]
                                                               - expected[list(spec.indices)])), 1e-8)

    def test_table_matches_evaluation(self):
        x = np.random.default_rng(11).random(6)
        for params in SAMPLE_PARAMETERS:
            for spec in (ConstraintSpec(6), ConstraintSpec(7, 1, 2), ConstraintSpec(8, 2, 2)):
                table = ctable_build(spec, params)
                basis = bernstein_basis_matrix(spec.n, x)[:, list(spec.indices)]
                for i in spec.indices:
                    from_table = basis @ table.row(i)
                    evaluated = constrained_dual_eval(spec, i, params, x)
                    scale = max(np.max(np.abs(evaluated)), 1.0)
                    self.assertLessEqual(np.max(np.abs(from_table - evaluated)), 1e-9 * scale)


class TestInnerProducts(unittest.TestCase):

    def test_examples(self):
        for params in SAMPLE_PARAMETERS:
            self.assertAlmostEqual(bernstein_inner(0, 0, 0, 0, params),
                                   beta_fn(params.alpha + 1, params.beta + 1), places=13)
        self.assertAlmostEqual(bernstein_inner(2, 1, 2, 1, JacobiParams()), 2 / 15, places=15)
        self.assertAlmostEqual(bernstein_inner(1, 0, 1, 1, JacobiParams()), 1 / 6, places=15)

    def test_matches_quadrature(self):
        for params in SAMPLE_PARAMETERS + (JacobiParams(2.5, -0.5),):
            x, w = gauss_jacobi(400, params)
            for n, m in ((3, 5), (6, 6), (10, 2)):
                left = bernstein_basis_matrix(n, x)
                right = bernstein_basis_matrix(m, x)
                for i in range(n + 1):
                    for j in range(m + 1):
                        quadrature = np.sum(w * left[:, i] * right[:, j])
                        self.assertAlmostEqual(bernstein_inner(n, i, m, j, params) / quadrature, 1.0, delta=1e-10)

    def test_index_errors(self):
        with self.assertRaises(IndexOutOfRange):
            bernstein_inner(2, 3, 2, 0, JacobiParams())
