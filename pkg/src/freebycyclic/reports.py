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
"""Reports: running a command on a spec file and rendering the result.

The structured rendering is line oriented. A block opens with ``[name]``
indented two spaces per nesting level; its fields follow as ``key = value``
lines at the next indentation. A list field repeats its key once per
entry. Absent values and empty lists are omitted::

    [report]
      command = certify
      exit_code = 0
      [certificate]
        kind = splitting
        order = 1
        [splitting]
          relations = e3^-1 t e3 = e0 e1 e2^-1 t

The text rendering shows the same values as titled sections of aligned
rows.
"""
from collections import namedtuple
import hashlib
import logging

from . import cayley
from . import certificates
from . import endomorphisms
from . import exceptions
from . import growth
from . import misc
from . import presentation
from . import transitions
from . import validators

__all__ = ('Classification', 'Presentation', 'Refusal', 'DivergenceRow',
           'Provenance', 'Report', 'execute', 'render', 'parse_report',
           'exit_code_for', 'COMMANDS')

log = logging.getLogger(__name__)

GROWTH = 'growth'
CERTIFY = 'certify'
DIVERGENCE = 'divergence'
ANALYZE = 'analyze'
COMMANDS = (ANALYZE, GROWTH, CERTIFY, DIVERGENCE)

TEXT = 'text'
STRUCTURED = 'structured'
FORMATS = (TEXT, STRUCTURED)

EXIT_OK = 0
EXIT_CODES = (
    (exceptions.InputError, 1),
    (exceptions.VerificationError, 2),
    (exceptions.ConsistencyError, 2),
    (exceptions.RefusedError, 3),
    (exceptions.GrowthError, 3),
    (exceptions.ResourceLimitExceeded, 4),
)


class Classification(namedtuple('Classification', [
        'growth', 'eta', 'ratio', 'slope', 'residual', 'spectral_radius',
        'samples', 'truncated', 'branch'])):
    """Growth classification of the automorphism."""

    __slots__ = ()

    @classmethod
    def from_profile(cls, profile, spectral_radius=None):
        """Summarise a classified growth profile."""
        branch = (growth.EXPONENTIAL_BRANCH if profile.is_exponential
                  else None)
        return cls(profile.classification, profile.eta, profile.ratio,
                   profile.slope, profile.residual, spectral_radius,
                   len(profile.samples), profile.truncated, branch)


class Presentation(namedtuple('Presentation', ['generators', 'relations'])):
    """Rendered presentation of the mapping torus."""

    __slots__ = ()

    @classmethod
    def from_automorphism(cls, phi):
        """Present the mapping torus of a certified automorphism."""
        group = presentation.mapping_torus_presentation(phi)
        return cls(group.generators.generators, tuple(group.relations()))


class Refusal(namedtuple('Refusal', ['reason', 'message', 'exit_code'])):
    """Why a command produced no certificate or samples."""

    __slots__ = ()

    @classmethod
    def from_error(cls, error):
        """Describe a library exception."""
        return cls(error.reason_code, str(error), exit_code_for(error))


class DivergenceRow(namedtuple('DivergenceRow', [
        'radius', 'chi', 'bound', 'horizon', 'region_size', 'witness',
        'path_length'])):
    """Rendered :class:`~freebycyclic.cayley.DivergenceSample`.

    ``bound`` is ``4 * radius``, the linear divergence bound of a product.
    """

    __slots__ = ()

    @classmethod
    def from_sample(cls, sample, torus_format):
        """Render a sample with ``torus_format`` for elements."""
        witness = None
        if sample.witness is not None:
            witness = ' ; '.join(torus_format(element)
                                 for element in sample.witness)
        path_length = len(sample.path) - 1 if sample.path else None
        return cls(sample.radius, sample.chi, 4 * sample.radius,
                   sample.horizon, sample.region_size, witness, path_length)


class Provenance(namedtuple('Provenance', ['input_sha256', 'parameters',
                                           'tool_version'])):
    """Where a report came from; it carries no timestamp."""

    __slots__ = ()


class Report(namedtuple('Report', [
        'command', 'exit_code', 'classification', 'presentation',
        'certificate', 'refusal', 'metrics', 'provenance'])):
    """Outcome of one command.

    .. attribute:: metrics

        Tuple of :class:`DivergenceRow`, possibly empty.
    """

    __slots__ = ()

    def __new__(cls, command, exit_code=EXIT_OK, classification=None,
                presentation=None, certificate=None, refusal=None,
                metrics=(), provenance=None):
        """Create a new Report."""
        return super(Report, cls).__new__(
            cls, command, exit_code, classification, presentation,
            certificate, refusal, tuple(metrics), provenance)


def exit_code_for(error):
    """Map a library exception to the command's exit status."""
    for kind, code in EXIT_CODES:
        if isinstance(error, kind):
            return code
    return 2


def _tool_version():
    from . import __version__
    return __version__


def provenance(text, parameters):
    """Hash the input and record the sorted parameters."""
    digest = hashlib.sha256(text.encode('utf-8')).hexdigest()
    rendered = tuple('{0}={1}'.format(key, parameters[key])
                     for key in sorted(parameters))
    return Provenance(digest, rendered, _tool_version())


def _classify(phi, max_n, word_cap):
    profile = growth.growth_degree(phi, max_n, word_cap)
    analysis = transitions.transition_analysis(phi)
    return profile, Classification.from_profile(
        profile, round(analysis.spectral_radius, 6))


def _certify(spec, profile, max_n, word_cap, power):
    certificates.require_polynomial(profile)
    f = validators.verify_representative(spec.candidate())
    return certificates.certify_thickness(f, max_n, word_cap, power)


def _divergence(phi, radii, horizon, budget):
    stable = phi.basis.stable_letter()

    def torus_format(element):
        return element.format(phi.basis, stable)

    return [DivergenceRow.from_sample(
        cayley.divergence_chi(phi, radius, horizon, budget), torus_format)
        for radius in radii]


def execute(command, spec, max_n=misc.DEFAULT_MAX_N, radii=(),
            horizon=misc.DEFAULT_HORIZON, power=None, environ=None):
    """Run ``command`` on a parsed spec file.

    ``growth`` classifies the automorphism; ``certify`` adds the thickness
    certificate; ``divergence`` adds ``chi`` for each radius; ``analyze``
    does all three and presents the mapping torus. Errors become a refusal
    with its exit code instead of propagating.

    :param str command: One of :data:`COMMANDS`.
    :param spec: The :class:`~freebycyclic.specfile.SpecFile`.
    :param int max_n: Growth sampling horizon.
    :param radii: Radii for the divergence samples.
    :param int horizon: Initial divergence search multiple.
    :param int power: (optional) Overrides the spec's ``power:`` line.
    :param dict environ: (optional) Environment for the budget caps.
    :rtype: Report
    """
    if command not in COMMANDS:
        raise exceptions.InputError('Unknown command {0!r}'.format(command))
    if power is None:
        power = spec.power
    parameters = {'command': command, 'max_n': max_n, 'power': power}
    if command in (DIVERGENCE, ANALYZE):
        parameters['radii'] = ','.join(str(radius) for radius in radii)
        parameters['horizon'] = horizon
    report = Report(command, provenance=provenance(spec.text, parameters))
    try:
        budgets = misc.Budgets.from_environ(environ)
        phi = endomorphisms.certified(spec.endomorphism())
        declared = spec.declared_inverse()
        if declared is not None and not spec.has_graph:
            endomorphisms.check_declared_inverse(phi, declared)
        profile, classification = _classify(phi, max_n, budgets.word_cap)
        report = report._replace(classification=classification)
        if command == ANALYZE:
            report = report._replace(
                presentation=Presentation.from_automorphism(phi))
        if command in (CERTIFY, ANALYZE):
            report = report._replace(certificate=_certify(
                spec, profile, max_n, budgets.word_cap, power))
        if command in (DIVERGENCE, ANALYZE):
            report = report._replace(metrics=tuple(_divergence(
                phi, radii, horizon, budgets.ball_budget)))
    except exceptions.FreeByCyclicException as error:
        log.info('%s refused: %s', command, error)
        refusal = Refusal.from_error(error)
        report = report._replace(refusal=refusal, exit_code=refusal.exit_code)
    return report


STR = 'str'
INT = 'int'
FLOAT = 'float'
BOOL = 'bool'
CHI = 'chi'
LIST = 'list'

# Block name and fields of every rendered type. A field kind is a scalar
# kind, LIST, a type (one nested block) or a one-element list of a type
# (repeated nested blocks).
SCHEMA = {
    Report: ('report', (
        ('command', STR), ('exit_code', INT),
        ('classification', Classification),
        ('presentation', Presentation), ('refusal', Refusal),
        ('certificate', certificates.ThicknessCertificate),
        ('metrics', [DivergenceRow]), ('provenance', Provenance))),
    Classification: ('classification', (
        ('growth', STR), ('eta', INT), ('ratio', FLOAT), ('slope', FLOAT),
        ('residual', FLOAT), ('spectral_radius', FLOAT), ('samples', INT),
        ('truncated', BOOL), ('branch', STR))),
    Presentation: ('presentation', (
        ('generators', LIST), ('relations', LIST))),
    Refusal: ('refusal', (
        ('reason', STR), ('message', STR), ('exit_code', INT))),
    certificates.ThicknessCertificate: ('certificate', (
        ('kind', STR), ('order', INT), ('eta', INT), ('power', INT),
        ('edges', LIST), ('witness', STR), ('e_witnesses', LIST),
        ('citations', LIST),
        ('splitting', certificates.SplittingSummary),
        ('network', certificates.NetworkSummary),
        ('children', [certificates.ThicknessCertificate]))),
    certificates.SplittingSummary: ('splitting', (
        ('kind', STR), ('graph_kind', STR), ('removed', LIST),
        ('relations', LIST), ('edge_groups', LIST), ('doomed_edges', LIST),
        ('doomed_vertices', LIST), ('pieces', LIST))),
    certificates.NetworkSummary: ('network', (
        ('w0', LIST), ('w1', LIST), ('adjacency', LIST),
        ('connected', BOOL), ('chain_bound', INT))),
    DivergenceRow: ('sample', (
        ('radius', INT), ('chi', CHI), ('bound', INT), ('horizon', INT),
        ('region_size', INT), ('witness', STR), ('path_length', INT))),
    Provenance: ('provenance', (
        ('input_sha256', STR), ('parameters', LIST),
        ('tool_version', STR))),
}


def _format_scalar(value):
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _parse_scalar(kind, text):
    if kind == INT:
        return int(text)
    if kind == FLOAT:
        return float(text)
    if kind == BOOL:
        if text not in ('true', 'false'):
            raise exceptions.InputError('{0!r} is not a boolean'.format(text))
        return text == 'true'
    if kind == CHI:
        return text if text == cayley.DISCONNECTED else int(text)
    return text


def _is_block(kind):
    return isinstance(kind, type) or isinstance(kind, list)


def _structured(value, depth, lines):
    name, fields = SCHEMA[type(value)]
    indent = '  ' * depth
    lines.append('{0}[{1}]'.format(indent, name))
    inner = '  ' * (depth + 1)
    for field, kind in fields:
        item = getattr(value, field)
        if item is None or _is_block(kind):
            continue
        for entry in (item if kind == LIST else (item,)):
            lines.append('{0}{1} = {2}'.format(inner, field,
                                               _format_scalar(entry)))
    for field, kind in fields:
        item = getattr(value, field)
        if item is None or not _is_block(kind):
            continue
        for entry in (item if isinstance(kind, list) else (item,)):
            _structured(entry, depth + 1, lines)


def _title(field):
    return field.replace('_', ' ').capitalize()


def _text(value, depth, lines, title=None):
    name, fields = SCHEMA[type(value)]
    indent = '  ' * depth
    heading = indent + (title or _title(name))
    lines.append(heading)
    lines.append(indent + '-' * (len(heading) - len(indent)))
    rows = []
    for field, kind in fields:
        item = getattr(value, field)
        if item is None or _is_block(kind):
            continue
        entries = item if kind == LIST else (item,)
        for position, entry in enumerate(entries):
            rows.append((_title(field) if position == 0 else '',
                         _format_scalar(entry)))
    width = max([len(label) for label, _ in rows] or [0])
    for label, text in rows:
        lines.append('{0}  {1}  {2}'.format(indent, label.ljust(width), text))
    for field, kind in fields:
        item = getattr(value, field)
        if item is None or not _is_block(kind):
            continue
        for entry in (item if isinstance(kind, list) else (item,)):
            _text(entry, depth + 1, lines)


def render(report, format=STRUCTURED):
    """Render a report as UTF-8 bytes.

    :param report: The :class:`Report`.
    :param str format: ``'structured'`` or ``'text'``.
    :rtype: bytes
    """
    if format not in FORMATS:
        raise exceptions.InputError('Unknown format {0!r}'.format(format))
    lines = []
    if format == STRUCTURED:
        _structured(report, 0, lines)
    else:
        _text(report, 0, lines, title='Report: {0}'.format(report.command))
    return ('\n'.join(lines) + '\n').encode('utf-8')


def _tokens(text):
    tokens = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        match = misc.BLOCK_HEADER_MATCHER.match(line)
        if match:
            tokens.append((len(match.group('indent')), 'block',
                           match.group('name'), None, number))
            continue
        match = misc.FIELD_LINE_MATCHER.match(line)
        if match:
            tokens.append((len(match.group('indent')), 'field',
                           match.group('key'), match.group('value'), number))
            continue
        raise exceptions.SpecParseError(number, line, 'not a report line')
    return tokens


def _read_block(tokens, position, cls, depth):
    _, fields = SCHEMA[cls]
    kinds = dict(fields)
    children = {}
    for field, kind in fields:
        if _is_block(kind):
            child = kind[0] if isinstance(kind, list) else kind
            children[SCHEMA[child][0]] = (field, kind, child)
    values = {}
    while position < len(tokens):
        indent, token, key, text, number = tokens[position]
        if indent <= depth * 2:
            break
        if indent != (depth + 1) * 2:
            raise exceptions.SpecParseError(number, key, 'bad indentation')
        if token == 'field':
            kind = kinds.get(key)
            if kind is None or _is_block(kind):
                raise exceptions.SpecParseError(number, key, 'unknown field')
            value = _parse_scalar(STR if kind == LIST else kind, text)
            if kind == LIST:
                values.setdefault(key, []).append(value)
            else:
                values[key] = value
            position += 1
            continue
        if key not in children:
            raise exceptions.SpecParseError(number, key, 'unknown block')
        field, kind, child = children[key]
        value, position = _read_block(tokens, position + 1, child, depth + 1)
        if isinstance(kind, list):
            values.setdefault(field, []).append(value)
        else:
            values[field] = value
    arguments = {}
    for field, kind in fields:
        value = values.get(field)
        if kind == LIST or isinstance(kind, list):
            value = tuple(value or ())
        arguments[field] = value
    return cls(**arguments), position


def parse_report(text):
    """Read a structured rendering back into a :class:`Report`.

    :param text: Text or UTF-8 bytes from :func:`render`.
    :rtype: Report
    :raises freebycyclic.exceptions.SpecParseError:
        If a line does not belong to the format.
    """
    if isinstance(text, bytes):
        text = text.decode('utf-8')
    tokens = _tokens(text)
    if not tokens or tokens[0][1:3] != ('block', 'report') or tokens[0][0]:
        raise exceptions.SpecParseError(1, text[:20], 'no [report] block')
    report, position = _read_block(tokens, 1, Report, 0)
    if position != len(tokens):
        raise exceptions.SpecParseError(tokens[position][4],
                                        tokens[position][2],
                                        'text after the report')
    return report
