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
"""Command-line entry point ``freebycyclic``.

.. code-block:: sh

    freebycyclic certify remark.fbc --format text
    freebycyclic divergence z2.fbc --radius 2..8 --horizon 4
"""
import argparse
import io
import logging
import sys

from . import exceptions
from . import misc
from . import reports
from . import specfile

log = logging.getLogger(__name__)


def parse_radii(text):
    """Read ``R`` or ``R0..R1`` into a list of radii."""
    match = misc.RADIUS_RANGE_MATCHER.match(text)
    if match is None:
        raise argparse.ArgumentTypeError(
            '{0!r} is not a radius or a range R0..R1'.format(text))
    low = int(match.group('low'))
    high = int(match.group('high') or low)
    if high < low:
        raise argparse.ArgumentTypeError(
            'the range {0!r} is empty'.format(text))
    return list(range(low, high + 1))


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError('expected a positive integer')
    return value


def build_parser():
    """Return the :class:`argparse.ArgumentParser` for the tool."""
    parser = argparse.ArgumentParser(
        prog='freebycyclic',
        description='Growth, thickness certificates and divergence samples '
                    'for mapping tori of free-group automorphisms.')
    parser.add_argument('command', choices=reports.COMMANDS,
                        help='What to compute.')
    parser.add_argument('spec', help='Path to a spec file.')
    parser.add_argument('--max-n', type=_positive, default=misc.DEFAULT_MAX_N,
                        help='Growth sampling horizon (default: %(default)s).')
    parser.add_argument('--radius', type=parse_radii, default=[2],
                        help='Divergence radius R or range R0..R1 '
                             '(default: 2).')
    parser.add_argument('--horizon', type=_positive,
                        default=misc.DEFAULT_HORIZON,
                        help='Initial divergence search multiple of the '
                             'radius (default: %(default)s).')
    parser.add_argument('--format', choices=reports.FORMATS,
                        default=reports.TEXT,
                        help='Output format (default: %(default)s).')
    parser.add_argument('--power', type=_positive, default=None,
                        help='The representative is of phi**K.')
    parser.add_argument('--verbose', action='store_true',
                        help='Log progress at DEBUG level.')
    return parser


def main(argv=None, stdout=None):
    """Run the tool and return its exit status."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s')
    if stdout is None:
        stdout = sys.stdout.buffer
    try:
        with io.open(args.spec, encoding='utf-8') as handle:
            text = handle.read()
        spec = specfile.parse_spec(text)
    except (IOError, exceptions.InputError) as error:
        sys.stderr.write('freebycyclic: {0}\n'.format(error))
        return 1
    report = reports.execute(args.command, spec, max_n=args.max_n,
                             radii=args.radius, horizon=args.horizon,
                             power=args.power)
    stdout.write(reports.render(report, args.format))
    if report.refusal is not None:
        sys.stderr.write('freebycyclic: {0}: {1}\n'.format(
            report.refusal.reason, report.refusal.message))
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
