# -*- coding: utf-8 -*-
# Copyright (c) 2026 The freebycyclic developers
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
# implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Module containing compiled regular expressions and constants.

This module contains the defaults shared by the analysis modules, the
compiled matchers for the spec-file and report formats, and the budget
configuration read from the environment.
"""
from collections import namedtuple
import os
import re

from . import exceptions
from . import grammar

# Growth classification thresholds.
DEFAULT_MAX_N = 64
MIN_SAMPLES = 8
EXPONENTIAL_RATIO = 1.05
RESIDUAL_THRESHOLD = 0.15
SPECTRAL_TOLERANCE = 1e-6

# Resource caps.
DEFAULT_WORD_CAP = 10 ** 6
DEFAULT_BALL_BUDGET = 200000
DEFAULT_HORIZON = 4

STABLE_LETTER = 't'

WORD_CAP_VARIABLE = 'FREEBYCYCLIC_WORD_CAP'
BALL_BUDGET_VARIABLE = 'FREEBYCYCLIC_BALL_BUDGET'

LETTER_MATCHER = re.compile('^{0}$'.format(grammar.LETTER_RE))
NAME_MATCHER = re.compile('^{0}$'.format(grammar.NAME_RE))

BASIS_LINE_MATCHER = re.compile(grammar.BASIS_LINE_RE)
ORDER_LINE_MATCHER = re.compile(grammar.ORDER_LINE_RE)
POWER_LINE_MATCHER = re.compile(grammar.POWER_LINE_RE)
MAP_LINE_MATCHER = re.compile(grammar.MAP_LINE_RE)
INVERSE_LINE_MATCHER = re.compile(grammar.INVERSE_LINE_RE)
EDGE_LINE_MATCHER = re.compile(grammar.EDGE_LINE_RE)

RADIUS_RANGE_MATCHER = re.compile(grammar.RADIUS_RANGE_RE)

BLOCK_HEADER_MATCHER = re.compile(grammar.BLOCK_HEADER_RE)
FIELD_LINE_MATCHER = re.compile(grammar.FIELD_LINE_RE)


class Budgets(namedtuple('Budgets', ['word_cap', 'ball_budget'])):
    """Resource caps used by growth sampling and Cayley exploration.

    .. attribute:: word_cap

        Longest reduced word, in letters, that iteration may produce.

    .. attribute:: ball_budget

        Largest number of group elements a ball search may hold.
    """

    __slots__ = ()

    def __new__(cls, word_cap=DEFAULT_WORD_CAP,
                ball_budget=DEFAULT_BALL_BUDGET):
        """Create a new set of budgets."""
        return super(Budgets, cls).__new__(cls, word_cap, ball_budget)

    @classmethod
    def from_environ(cls, environ=None):
        """Read budget overrides from the environment.

        :param dict environ:
            (optional) Mapping to read instead of :data:`os.environ`.
        :returns:
            Budgets with any overrides applied.
        :rtype:
            Budgets
        :raises freebycyclic.exceptions.InputError:
            If a variable is set to something other than a positive integer.
        """
        if environ is None:
            environ = os.environ
        return cls(
            word_cap=_positive_integer(environ, WORD_CAP_VARIABLE,
                                       DEFAULT_WORD_CAP),
            ball_budget=_positive_integer(environ, BALL_BUDGET_VARIABLE,
                                          DEFAULT_BALL_BUDGET),
        )


def _positive_integer(environ, variable, default):
    value = environ.get(variable)
    if value is None or value == '':
        return default
    try:
        number = int(value, base=10)
    except ValueError:
        number = 0
    if number <= 0:
        raise exceptions.InputError(
            '{0} must be a positive integer, not {1!r}'.format(variable, value)
        )
    return number
