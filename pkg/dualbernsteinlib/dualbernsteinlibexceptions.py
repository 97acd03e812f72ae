#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: dualbernsteinlibexceptions.py
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
Custom exception code for dualbernsteinlib.

Every exception also derives from the closest builtin so that callers that only
know about ``ValueError`` or ``IndexError`` keep working.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

__author__ = '''Costas Tyfoxylos <costas.tyf@gmail.com>'''
__docformat__ = '''google'''
__date__ = '''18-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<costas.tyf@gmail.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


class DualBernsteinError(Exception):
    """Root of all the errors raised by the library."""


class InvalidParameters(DualBernsteinError, ValueError):
    """Weight exponents, constraint orders, degrees or tolerances are not admissible."""


class DomainError(DualBernsteinError, ValueError):
    """A special function was called outside of its domain."""


class IndexOutOfRange(DualBernsteinError, IndexError):
    """An index lies outside the admissible range of an operation."""


class DegreeMismatch(DualBernsteinError, ValueError):
    """Degrees, dimensions or shapes of the arguments do not agree."""


class UnsupportedOrder(DualBernsteinError, ValueError):
    """A derivative order beyond what is supported was requested."""


class OracleSizeExceeded(DualBernsteinError, ValueError):
    """The exact oracle was asked for a system above its size guard."""


class SingularMatrix(DualBernsteinError, ArithmeticError):
    """An exact inversion met a matrix without a full set of pivots."""


class IllConditioned(DualBernsteinError, ArithmeticError):
    """A floating point solve was refused because of its condition estimate."""

    def __init__(self, condition, limit):
        self.condition = condition
        self.limit = limit
        super().__init__(f'Condition estimate {condition:.3e} exceeds the limit {limit:.3e}')


class MalformedDocument(DualBernsteinError, ValueError):
    """A json document could not be parsed or does not describe a valid object."""
