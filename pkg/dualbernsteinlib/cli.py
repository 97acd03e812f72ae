#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: cli.py
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
Command line front end of dualbernsteinlib.

Subcommands read curves as json documents from a file or standard input and
write json (or csv for tables) to standard output. Diagnostics and logging go
to standard error. Exit codes: 0 success, 2 invalid parameters, 3 malformed
input document.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import argparse
import csv
import io
import json
import logging
import math
import sys
from fractions import Fraction
from numbers import Real

import coloredlogs
import numpy as np

from ._version import __version__
from .approx import RationalBezier, clip_roots, degree_reduce, l2_error, rational_approx
from .basis import BezierCurve, JacobiExpansion, bernstein_to_jacobi, jacobi_to_bernstein
from .configuration import (DEFAULT_ROOT_MAX_ITERATIONS,
                            DEFAULT_ROOT_TOLERANCE,
                            EXIT_FORMAT_ERROR,
                            EXIT_PARAMETER_ERROR,
                            EXIT_SUCCESS,
                            LOGGING_LEVEL)
from .dualbernsteinlibexceptions import (DegreeMismatch,
                                         DomainError,
                                         IndexOutOfRange,
                                         InvalidParameters,
                                         MalformedDocument,
                                         OracleSizeExceeded,
                                         UnsupportedOrder)
from .dualcore import ConstraintSpec, ctable_build
from .oracle import dual_table_exact
from .specfun import JacobiParams, beta_fn

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
LOGGER_BASENAME = '''dualbernsteinlib.cli'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

PARAMETER_ERRORS = (InvalidParameters,
                    DomainError,
                    IndexOutOfRange,
                    DegreeMismatch,
                    UnsupportedOrder,
                    OracleSizeExceeded)

LOG_LEVELS = ('debug', 'info', 'warning', 'error', 'critical')

UNEXPECTED_ERRORS = (ValueError, ArithmeticError)


def setup_logging(level):
    """Installs coloredlogs on standard error at the provided level."""
    coloredlogs.install(level=level.upper(), stream=sys.stderr)


def _is_number(value):
    return isinstance(value, Real) and not isinstance(value, bool) and math.isfinite(value)


def _is_count(value):
    return isinstance(value, int) and not isinstance(value, bool) and value >= 0


def read_document(path):
    """Loads a json document from a file, or from standard input when the path is ``-``.

    Raises:
        InvalidParameters: if the file cannot be read.
        MalformedDocument: if the contents are not json.

    """
    try:
        if path == '-':
            text = sys.stdin.read()
        else:
            with open(path, 'r', encoding='utf-8') as input_file:
                text = input_file.read()
    except OSError as error:
        raise InvalidParameters(f'Cannot read {path}: {error.strerror}') from error
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise MalformedDocument(f'Input is not valid json: {error}') from error


def parse_curve_document(document):
    """Validates a curve document.

    Returns:
        tuple: (BezierCurve, weights or None).

    Raises:
        MalformedDocument: if any of the document invariants does not hold.

    """
    if not isinstance(document, dict):
        raise MalformedDocument('A curve document should be a json object')
    degree = document.get('degree')
    dimension = document.get('dimension')
    points = document.get('points')
    if not _is_count(degree) or not _is_count(dimension) or dimension < 1:
        raise MalformedDocument('Curve document needs a nonnegative integer degree and a positive dimension')
    if not isinstance(points, list) or len(points) != degree + 1:
        raise MalformedDocument(f'Curve document of degree {degree} needs {degree + 1} points')
    for point in points:
        if not isinstance(point, list) or len(point) != dimension or not all(_is_number(value) for value in point):
            raise MalformedDocument(f'Every point should be a list of {dimension} finite numbers, got {point!r}')
    weights = document.get('weights')
    if weights is not None:
        if not isinstance(weights, list) or len(weights) != degree + 1:
            raise MalformedDocument(f'Curve document of degree {degree} needs {degree + 1} weights')
        if not all(_is_number(weight) and weight > 0 for weight in weights):
            raise MalformedDocument(f'Weights should be positive numbers, got {weights!r}')
    return BezierCurve(np.array(points, dtype=float)), weights


def curve_document(curve):
    """The json document of a Bezier curve."""
    return {'degree': curve.degree,
            'dimension': curve.dimension,
            'points': curve.points.tolist()}


def dump_document(document):
    """Serializes a result document as strict json.

    Raises:
        InvalidParameters: if the document holds non finite numbers.

    """
    try:
        return json.dumps(document, indent=2, allow_nan=False)
    except ValueError as error:
        raise InvalidParameters('Result has non finite numbers, double precision range exceeded') from error


def _params(args):
    return JacobiParams(float(args.alpha), float(args.beta))


def _load_curve(args, allow_weights=False):
    curve, weights = parse_curve_document(read_document(args.input))
    if weights is not None and not allow_weights:
        raise InvalidParameters('This command works on polynomial curves, the input document has weights')
    return curve, weights


def cmd_dual_table(args):
    """Emits the C-table of (n, k, l, alpha, beta)."""
    spec = ConstraintSpec(args.n, args.k, args.l)
    params = _params(args)
    table = ctable_build(spec, params, use_symmetry=args.symmetric)
    if not np.all(np.isfinite(table.values)):
        raise InvalidParameters(f'C-table of {spec} overflows double precision')
    if args.verify:
        scale = beta_fn(params.alpha + 1, params.beta + 1)
        exact = np.array(dual_table_exact(spec, args.alpha, args.beta), dtype=float) / scale
        deviation = np.max(np.abs(table.values - exact) / np.maximum(np.abs(exact), np.finfo(float).tiny))
        print(f'verify: maximum relative deviation from the exact table {deviation:.3e}', file=sys.stderr)
    indices = list(table.indices)
    if args.format == 'csv':
        output = io.StringIO()
        writer = csv.writer(output, lineterminator='\n')
        writer.writerow(['i'] + indices)
        for index, row in zip(indices, table.values.tolist()):
            writer.writerow([index] + [repr(value) for value in row])
        return output.getvalue().rstrip('\n')
    return dump_document({'n': spec.n,
                          'k': spec.k,
                          'l': spec.l,
                          'alpha': params.alpha,
                          'beta': params.beta,
                          'indices': indices,
                          'table': table.values.tolist()})


def cmd_reduce(args):
    """Emits the constrained degree reduction of the input curve and its L2 error."""
    curve, _ = _load_curve(args)
    params = _params(args)
    reduced = degree_reduce(curve, args.m, args.k, args.l, params)
    document = curve_document(reduced)
    document['l2_error_squared'] = l2_error(curve, reduced, params, squared=True).tolist()
    document['l2_error'] = l2_error(curve, reduced, params).tolist()
    return dump_document(document)


def cmd_roots(args):
    """Emits the root enclosures of a scalar polynomial."""
    curve, _ = _load_curve(args)
    enclosures = clip_roots(curve, args.tol, args.max_iter)
    return dump_document({'roots': [enclosure.root for enclosure in enclosures],
                          'enclosures': [{'lower': enclosure.lower,
                                          'upper': enclosure.upper,
                                          'converged': enclosure.converged} for enclosure in enclosures]})


def cmd_rational_approx(args):
    """Emits the polynomial approximation of a rational curve, weights default to one."""
    curve, weights = _load_curve(args, allow_weights=True)
    rational = RationalBezier(curve.points, weights if weights is not None else np.ones(curve.degree + 1))
    result = rational_approx(rational, args.m, args.k, args.l, _params(args), args.nodes)
    return dump_document(curve_document(result))


def _jacobi_coefficients(document):
    coefficients = document.get('coefficients') if isinstance(document, dict) else None
    if not isinstance(coefficients, list) or not coefficients:
        raise MalformedDocument('A jacobi document should be an object with a non empty coefficients list')
    rows = [value if isinstance(value, list) else [value] for value in coefficients]
    if len({len(row) for row in rows}) != 1 or not all(_is_number(value) for row in rows for value in row):
        raise MalformedDocument('Jacobi coefficients should be numbers or equally long lists of numbers')
    return np.array(rows, dtype=float)


def cmd_convert(args):
    """Converts between Bernstein control points and shifted Jacobi coefficients."""
    params = _params(args)
    if args.to == 'jacobi':
        curve, _ = _load_curve(args)
        columns = [bernstein_to_jacobi(curve.component(index), params).coeffs
                   for index in range(curve.dimension)]
        return dump_document({'alpha': params.alpha,
                              'beta': params.beta,
                              'degree': curve.degree,
                              'coefficients': np.column_stack(columns).tolist()})
    coefficients = _jacobi_coefficients(read_document(args.input))
    degree = coefficients.shape[0] - 1 if args.n is None else args.n
    columns = [jacobi_to_bernstein(JacobiExpansion(params, coefficients[:, index]), degree).coefficients
               for index in range(coefficients.shape[1])]
    return dump_document(curve_document(BezierCurve(np.column_stack(columns))))


def get_arguments(argv=None):
    """Parses the command line.

    Args:
        argv (list): the arguments, the process arguments when None.

    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--log-level',
                        choices=LOG_LEVELS,
                        default=LOGGING_LEVEL.lower(),
                        help='Logging level on standard error')
    weight = argparse.ArgumentParser(add_help=False)
    weight.add_argument('--alpha', type=Fraction, default=Fraction(0), help='Exponent of (1-x), e.g. 0.5 or 1/2')
    weight.add_argument('--beta', type=Fraction, default=Fraction(0), help='Exponent of x, e.g. 0.5 or 1/2')
    constraints = argparse.ArgumentParser(add_help=False)
    constraints.add_argument('--k', type=int, default=0, help='Derivative orders matched at 0')
    constraints.add_argument('--l', type=int, default=0, help='Derivative orders matched at 1')
    source = argparse.ArgumentParser(add_help=False)
    source.add_argument('--input', default='-', help='Input json document, - for standard input')

    parser = argparse.ArgumentParser(prog='dualbernstein',
                                     description='Constrained dual Bernstein polynomials and their applications')
    parser.add_argument('--version', action='version', version=__version__)
    subparsers = parser.add_subparsers(dest='command', required=True)

    table = subparsers.add_parser('dual-table', parents=[common, weight, constraints],
                                  help='Bezier coefficients of the constrained dual basis')
    table.add_argument('--n', type=int, required=True, help='The degree')
    table.add_argument('--format', choices=('json', 'csv'), default='json')
    table.add_argument('--symmetric', action='store_true',
                       help='Mirror half of the table when alpha == beta and k == l')
    table.add_argument('--verify', action='store_true', help='Compare against the exact rational table')
    table.set_defaults(func=cmd_dual_table)

    reduce = subparsers.add_parser('reduce', parents=[common, weight, constraints, source],
                                   help='Constrained multi-degree reduction of a Bezier curve')
    reduce.add_argument('--m', type=int, required=True, help='The output degree')
    reduce.set_defaults(func=cmd_reduce)

    roots = subparsers.add_parser('roots', parents=[common, source], help='Roots in [0, 1] of a scalar polynomial')
    roots.add_argument('--tol', type=float, default=DEFAULT_ROOT_TOLERANCE)
    roots.add_argument('--max-iter', type=int, default=DEFAULT_ROOT_MAX_ITERATIONS)
    roots.set_defaults(func=cmd_roots)

    rational = subparsers.add_parser('rational-approx', parents=[common, weight, constraints, source],
                                     help='Polynomial approximation of a rational Bezier curve')
    rational.add_argument('--m', type=int, required=True, help='The output degree')
    rational.add_argument('--nodes', type=int, default=None, help='Gauss-Jacobi nodes, 4 (n + m) by default')
    rational.set_defaults(func=cmd_rational_approx)

    convert = subparsers.add_parser('convert', parents=[common, weight, source],
                                    help='Conversion between Bernstein and shifted Jacobi coefficients')
    convert.add_argument('--to', choices=('jacobi', 'bernstein'), required=True)
    convert.add_argument('--n', type=int, default=None, help='Bernstein degree, the Jacobi degree by default')
    convert.set_defaults(func=cmd_convert)
    return parser.parse_args(argv)


def main(argv=None):
    """Runs one subcommand and returns the process exit code."""
    args = get_arguments(argv)
    setup_logging(args.log_level)
    try:
        output = args.func(args)
    except PARAMETER_ERRORS as error:
        print(f'error: {error}', file=sys.stderr)
        return EXIT_PARAMETER_ERROR
    except MalformedDocument as error:
        print(f'error: {error}', file=sys.stderr)
        return EXIT_FORMAT_ERROR
    except UNEXPECTED_ERRORS as error:
        LOGGER.debug('Subcommand %s failed', args.command, exc_info=True)
        print(f'error: {error}', file=sys.stderr)
        return EXIT_PARAMETER_ERROR
    print(output)
    return EXIT_SUCCESS


if __name__ == '__main__':
    raise SystemExit(main())
