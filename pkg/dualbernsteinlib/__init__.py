#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: __init__.py
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
dualbernsteinlib package.

Constrained dual Bernstein polynomials under the Jacobi weight, their
Bezier coefficients and the least squares applications built on them.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html
"""
from ._version import __version__
from .approx import (ApproxProblem,
                     BezierClipper,
                     FunctionMoments,
                     MomentProvider,
                     PolynomialMoments,
                     RationalBezier,
                     RationalMoments,
                     RootEnclosure,
                     clip_roots,
                     degree_reduce,
                     endpoint_derivative,
                     kij,
                     l2_error,
                     rational_approx,
                     rational_endpoint_derivatives,
                     rational_moments,
                     solve_constrained)
from .basis import (BezierCurve,
                    JacobiExpansion,
                    bernstein_basis_matrix,
                    bernstein_gram,
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
from .dualbernsteinlibexceptions import (DegreeMismatch,
                                         DomainError,
                                         DualBernsteinError,
                                         IllConditioned,
                                         IndexOutOfRange,
                                         InvalidParameters,
                                         MalformedDocument,
                                         OracleSizeExceeded,
                                         SingularMatrix,
                                         UnsupportedOrder)
from .dualcore import (ConstraintSpec,
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
from .oracle import (ctable_exact,
                     dual_table_exact,
                     gram_matrix_exact,
                     invert_exact,
                     normal_equations_solve)
from .specfun import (JacobiParams,
                      beta_fn,
                      gauss_jacobi,
                      hahn_q,
                      pochhammer,
                      shifted_jacobi)

__author__ = '''Costas Tyfoxylos <costas.tyf@gmail.com>'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<costas.tyf@gmail.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

# This is to 'use' the module(s), so lint doesn't complain
assert __version__
assert ApproxProblem
assert BezierClipper
assert FunctionMoments
assert MomentProvider
assert PolynomialMoments
assert RationalBezier
assert RationalMoments
assert RootEnclosure
assert clip_roots
assert degree_reduce
assert endpoint_derivative
assert kij
assert l2_error
assert rational_approx
assert rational_endpoint_derivatives
assert rational_moments
assert solve_constrained
assert BezierCurve
assert bernstein_basis_matrix
assert JacobiExpansion
assert bernstein_gram
assert bernstein_inner
assert bernstein_to_jacobi
assert constrained_dual_eval
assert de_casteljau_eval
assert degree_elevate
assert dual_jacobi_coeffs
assert dual_short_eval
assert jacobi_to_bernstein
assert restrict
assert subdivide
assert DegreeMismatch
assert DomainError
assert DualBernsteinError
assert IllConditioned
assert IndexOutOfRange
assert InvalidParameters
assert MalformedDocument
assert OracleSizeExceeded
assert SingularMatrix
assert UnsupportedOrder
assert ConstraintSpec
assert CTable
assert cij_direct
assert cij_ra_oracle
assert cij_shifted
assert ctable_build
assert ctable_extended
assert ctable_first_row
assert ctable_from_factorization
assert ctable_start_closed_form
assert u_factor
assert ctable_exact
assert dual_table_exact
assert gram_matrix_exact
assert invert_exact
assert normal_equations_solve
assert JacobiParams
assert beta_fn
assert gauss_jacobi
assert hahn_q
assert pochhammer
assert shifted_jacobi
