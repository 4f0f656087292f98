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
"""Module containing the verification of candidate representatives."""
from collections import namedtuple
import logging

from . import exceptions
from . import graphs
from . import representatives

__all__ = ('Candidate', 'RepresentativeValidator', 'verify_representative')

log = logging.getLogger(__name__)


class Candidate(namedtuple('Candidate', ['graph', 'order', 'images',
                                         'vertex_images'])):
    """Unverified graph map with a proposed filtration.

    .. attribute:: graph

        The :class:`~freebycyclic.graphs.MarkedGraph`.

    .. attribute:: order

        Proposed filtration as edge indices, lowest first.

    .. attribute:: images

        Tuple of :class:`~freebycyclic.graphs.EdgePath`, the image of each
        edge, indexed by edge.

    .. attribute:: vertex_images

        Mapping of vertices to their images; ``None`` means every vertex
        is fixed.
    """

    __slots__ = ()

    def __new__(cls, graph, order=None, images=(), vertex_images=None):
        """Create a new Candidate, defaulting to declaration order."""
        if order is None:
            order = range(len(graph.edges))
        return super(Candidate, cls).__new__(
            cls, graph, tuple(order), tuple(images), vertex_images)

    @classmethod
    def from_suffixes(cls, graph, order, suffixes):
        """Build a candidate whose edges map to ``e p`` for given suffixes."""
        images = [graphs.EdgePath(((index, 1),)).concat(suffix)
                  for index, suffix in enumerate(suffixes)]
        return cls(graph, order, images)

    def edge_name(self, index):
        """Name of the edge at ``index``."""
        return self.graph.edges[index].name


class RepresentativeValidator(object):
    """Object used to configure which filtration properties are checked.

    Example usage::

        >>> from freebycyclic import validators
        >>> validator = validators.RepresentativeValidator().require_connected(
        ... ).require_fixed_vertices().require_prefix_form(
        ... ).require_filtered_suffixes()
        >>> representative = validator.validate(candidate)

    """

    CHECKS = frozenset([
        'connected',
        'fixed_vertices',
        'prefix_form',
        'filtered_suffixes',
        'immersed',
        'normalisable',
    ])

    def __init__(self):
        """Initialize with no checks enabled."""
        self.enabled = {check: False for check in self.CHECKS}

    @classmethod
    def default(cls):
        """Return a validator with every check enabled."""
        return cls().require_connected().require_fixed_vertices(
        ).require_prefix_form().require_filtered_suffixes(
        ).require_immersed().require_normalisable()

    def _enable(self, check):
        self.enabled[check] = True
        return self

    def require_connected(self):
        """Require the whole graph, the top level, to be connected."""
        return self._enable('connected')

    def require_fixed_vertices(self):
        """Require the map to fix every vertex and edge endpoints to match."""
        return self._enable('fixed_vertices')

    def require_prefix_form(self):
        """Require each edge image to begin with the edge itself."""
        return self._enable('prefix_form')

    def require_filtered_suffixes(self):
        """Require each suffix to be closed and inside the earlier edges."""
        return self._enable('filtered_suffixes')

    def require_immersed(self):
        """Require each edge image to be immersed."""
        return self._enable('immersed')

    def require_normalisable(self):
        """Require the filtration to survive sinking invariant edges."""
        return self._enable('normalisable')

    def validate(self, candidate):
        """Check a candidate and build the representative.

        :param candidate: The :class:`Candidate`.
        :returns: The verified representative.
        :rtype: freebycyclic.representatives.FilteredRepresentative
        :raises freebycyclic.exceptions.FiltrationViolation:
            At the first violated property, naming the edge.
        :raises freebycyclic.exceptions.IncidenceError:
            When an edge image is not a path.
        """
        ensure_order_is_permutation(candidate)
        if self.enabled['connected']:
            ensure_connected(candidate)
        for image in candidate.images:
            image.check_incident(candidate.graph)
        if self.enabled['fixed_vertices']:
            ensure_vertices_fixed(candidate)
        if self.enabled['immersed']:
            ensure_images_immersed(candidate)
        if self.enabled['prefix_form']:
            ensure_prefix_form(candidate)
        suffixes = split_suffixes(candidate)
        if self.enabled['filtered_suffixes']:
            ensure_suffixes_filtered(candidate, suffixes)
        representative = representatives.FilteredRepresentative(
            candidate.graph, candidate.order, suffixes)
        if self.enabled['normalisable']:
            ensure_normalisable(representative)
        log.debug('verified representative with %d edges',
                  representative.edge_count)
        return representative

    def find_violation(self, candidate):
        """Return the first violation as a value, or ``None``."""
        try:
            self.validate(candidate)
        except exceptions.VerificationError as violation:
            return violation
        return None


def ensure_order_is_permutation(candidate):
    """Assert that the filtration lists every edge once."""
    if sorted(candidate.order) != list(range(len(candidate.graph.edges))):
        raise exceptions.FiltrationViolation(
            'B', None, 'the order must list every edge exactly once')
    if len(candidate.images) != len(candidate.graph.edges):
        raise exceptions.FiltrationViolation(
            'C', None, 'every edge needs an image')


def ensure_connected(candidate):
    """Assert that the top filtration level is connected."""
    if not candidate.graph.is_connected():
        raise exceptions.FiltrationViolation(
            'B', None, 'the top level of the filtration is disconnected')


def ensure_vertices_fixed(candidate):
    """Assert that vertices are fixed and edge images keep their endpoints."""
    graph = candidate.graph
    for vertex, image in sorted((candidate.vertex_images or {}).items()):
        if vertex != image:
            raise exceptions.FiltrationViolation(
                'A', None, 'vertex {0} maps to {1}'.format(vertex, image))
    for index, image in enumerate(candidate.images):
        edge = graph.edges[index]
        ends = image.endpoints(graph)
        if ends != (edge.origin, edge.terminus):
            raise exceptions.FiltrationViolation(
                'A', edge.name,
                'the image does not run from {0} to {1}'.format(
                    edge.origin, edge.terminus))


def ensure_images_immersed(candidate):
    """Assert that no edge image backtracks."""
    for index, image in enumerate(candidate.images):
        if not image.is_immersed():
            raise exceptions.FiltrationViolation(
                'C', candidate.edge_name(index), 'the image is not immersed')


def ensure_prefix_form(candidate):
    """Assert that each edge image begins with the edge."""
    for index in candidate.order:
        image = candidate.images[index].tightened()
        if image.is_trivial() or image.steps[0] != (index, 1):
            raise exceptions.FiltrationViolation(
                'C', candidate.edge_name(index),
                'the image must begin with {0}'.format(
                    candidate.edge_name(index)))


def split_suffixes(candidate):
    """Return the suffix ``p`` of each image ``e p`` after tightening."""
    suffixes = []
    for index, image in enumerate(candidate.images):
        image = image.tightened()
        if image.steps[:1] == ((index, 1),):
            suffixes.append(graphs.EdgePath(image.steps[1:]))
        else:
            suffixes.append(image)
    return tuple(suffixes)


def ensure_suffixes_filtered(candidate, suffixes):
    """Assert that each suffix is a closed path in the earlier levels."""
    graph = candidate.graph
    earlier = set()
    for index in candidate.order:
        suffix = suffixes[index]
        name = candidate.edge_name(index)
        later = suffix.edges_used() - earlier
        if later:
            raise exceptions.FiltrationViolation(
                'C', name, 'the suffix uses {0}, which is not below it'.format(
                    ', '.join(candidate.edge_name(edge)
                              for edge in sorted(later))))
        if not suffix.is_closed(graph, at=graph.edges[index].terminus):
            raise exceptions.FiltrationViolation(
                'C', name, 'the suffix is not closed at {0}'.format(
                    graph.edges[index].terminus))
        earlier.add(index)


def ensure_normalisable(representative):
    """Assert that sinking invariant edges keeps every suffix filtered."""
    moved = representatives.normalised(representative)
    candidate = Candidate.from_suffixes(
        moved.graph, moved.order, moved.suffixes)
    try:
        ensure_suffixes_filtered(candidate, moved.suffixes)
    except exceptions.FiltrationViolation as violation:
        raise exceptions.ConsistencyError(
            'normalising the filtration broke it: {0}'.format(violation))


def verify_representative(candidate):
    """Verify a candidate with every check enabled.

    :returns: The verified representative.
    :rtype: freebycyclic.representatives.FilteredRepresentative
    """
    return RepresentativeValidator.default().validate(candidate)
