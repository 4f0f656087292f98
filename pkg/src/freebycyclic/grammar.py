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
"""Module for the regular-expression sources of the freebycyclic formats.

The spec-file format is line oriented::

    # the linear example with a Nielsen suffix on the top edge
    basis: e0 e1 e2 e3
    map: e0 -> e0
    map: e1 -> e1 e0
    map: e2 -> e2 e0
    map: e3 -> e3 e0 e1 e2^-1

Optional lines are ``edge: <gen> <origin> <terminus>``, ``order: <names>``,
``inverse: <gen> -> <letters>`` and ``power: <k>``.

The structured report format nests ``[block]`` headers by indentation and
holds ``key = value`` fields.
"""

NAME_RE = '[A-Za-z_][A-Za-z0-9_]*'
VERTEX_RE = '[A-Za-z0-9_]+'
INTEGER_RE = '-?[0-9]+'

# One letter of a word: a generator name with an optional integer power.
LETTER_RE = '(?P<name>{0})(?:\\^(?P<power>{1}))?'.format(NAME_RE, INTEGER_RE)

COMMENT_MARKER = '#'
IDENTITY_TOKEN = '1'

BASIS_LINE_RE = '^basis\\s*:\\s*(?P<names>.*)$'
ORDER_LINE_RE = '^order\\s*:\\s*(?P<names>.*)$'
POWER_LINE_RE = '^power\\s*:\\s*(?P<power>[0-9]+)\\s*$'
MAP_LINE_RE = '^map\\s*:\\s*(?P<gen>{0})\\s*->\\s*(?P<image>.*)$'.format(
    NAME_RE)
INVERSE_LINE_RE = (
    '^inverse\\s*:\\s*(?P<gen>{0})\\s*->\\s*(?P<image>.*)$'.format(NAME_RE)
)
EDGE_LINE_RE = (
    '^edge\\s*:\\s*(?P<gen>{0})\\s+(?P<origin>{1})\\s+(?P<terminus>{1})\\s*$'
).format(NAME_RE, VERTEX_RE)

# Command-line radius ranges: ``4`` or ``2..8``.
RADIUS_RANGE_RE = '^(?P<low>[0-9]+)(?:\\.\\.(?P<high>[0-9]+))?$'

BLOCK_HEADER_RE = '^(?P<indent> *)\\[(?P<name>[a-z][a-z0-9_-]*)\\]$'
FIELD_LINE_RE = '^(?P<indent> *)(?P<key>[a-z][a-z0-9_]*) = (?P<value>.*)$'
