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
"""Filtered graph maps fixing every vertex.

A representative maps each edge ``e_i`` to the path ``e_i p_i`` where the
suffix ``p_i`` is a closed path in the union of the earlier edges. Paths are
mapped edge by edge and tightened.
"""
from collections import namedtuple
import logging

from . import endomorphisms
from . import exceptions
from . import graphs
from . import words

__all__ = ('FilteredRepresentative', 'tighten', 'is_nielsen', 'normalised',
           'restrict', 'collapse_free_faces')

log = logging.getLogger(__name__)


class FilteredRepresentative(namedtuple('FilteredRepresentative',
                                        ['graph', 'order', 'suffixes'])):
    """Verified filtered graph map.

    Instances come from
    :func:`freebycyclic.validators.verify_representative`; the constructor
    does not check the filtration properties.

    .. attribute:: graph

        The :class:`~freebycyclic.graphs.MarkedGraph`.

    .. attribute:: order

        Edge indices in filtration order, lowest first.

    .. attribute:: suffixes

        Tuple of :class:`~freebycyclic.graphs.EdgePath` indexed by edge.
    """

    __slots__ = ()

    def __new__(cls, graph, order, suffixes):
        """Create a new FilteredRepresentative."""
        return super(FilteredRepresentative, cls).__new__(
            cls, graph, tuple(order), tuple(suffixes))

    @property
    def edge_count(self):
        """Number of edges."""
        return len(self.order)

    def edge_name(self, index):
        """Name of the edge at ``index``."""
        return self.graph.edges[index].name

    def position(self, index):
        """Filtration position of an edge, counting from 1."""
        return self.order.index(index) + 1

    def edge_image(self, index):
        """Return ``f(e) = e p`` for the edge at ``index``."""
        return graphs.EdgePath(((index, 1),)).concat(self.suffixes[index])

    def map_path(self, path):
        """Return the tightened image of ``path``."""
        factors = []
        for edge, direction in path.steps:
            image = self.edge_image(edge).as_word()
            factors.append(image if direction > 0 else image.inverse())
        return graphs.EdgePath(words.reduce_product(factors).letters)

    def is_invariant(self, index):
        """``True`` when the edge is fixed, its suffix being trivial."""
        return self.suffixes[index].is_trivial()

    def invariant_edges(self):
        """Invariant edge indices in filtration order."""
        return [index for index in self.order if self.is_invariant(index)]

    def level(self, i):
        """Edge indices of the filtration level ``Gamma_i``."""
        return frozenset(self.order[:i])

    @property
    def top_edge(self):
        """The edge added last."""
        return self.order[-1]

    def base_index(self):
        """Largest ``i`` with every edge of ``Gamma_i`` invariant."""
        count = 0
        for index in self.order:
            if not self.is_invariant(index):
                break
            count += 1
        return count

    def is_all_invariant(self):
        """``True`` when every edge is fixed."""
        return self.base_index() == self.edge_count

    def induced_endomorphism(self):
        """Return the automorphism induced on the fundamental group.

        Generators are the edges outside a spanning tree chosen in
        filtration order.
        """
        marking = self.graph.marking(self.order)
        images = [marking.read(self.map_path(marking.loop(self.graph, edge)))
                  for edge in marking.generators]
        return endomorphisms.Endomorphism(marking.basis, images)

    def format_images(self):
        """Return ``[(edge name, rendered image)]`` in filtration order."""
        return [(self.edge_name(index),
                 self.edge_image(index).format(self.graph))
                for index in self.order]


def tighten(path, f, iterations=0):
    """Apply ``f`` to ``path`` repeatedly, tightening after every step.

    :param path: An :class:`~freebycyclic.graphs.EdgePath`.
    :param f: The :class:`FilteredRepresentative`.
    :param int iterations: How often to apply ``f``; ``0`` only tightens.
    :rtype: EdgePath
    :raises freebycyclic.exceptions.IncidenceError:
        If consecutive steps of ``path`` do not meet.
    """
    path.check_incident(f.graph)
    path = path.tightened()
    for _ in range(iterations):
        path = f.map_path(path)
    return path


def is_nielsen(path, f):
    """Decide whether a closed immersed path is fixed after tightening.

    :raises freebycyclic.exceptions.InputError:
        If the path is not closed or not immersed.
    """
    path.check_incident(f.graph)
    if not path.is_closed(f.graph) or not path.is_immersed():
        raise exceptions.InputError(
            'Path {0} is not a closed immersed path'.format(
                path.format(f.graph)))
    return f.map_path(path) == path


def normalised(f):
    """Sink the invariant edges below the others, keeping relative order."""
    order = (f.invariant_edges() +
             [index for index in f.order if not f.is_invariant(index)])
    if tuple(order) != f.order:
        log.info('moved %d invariant edges to the bottom of the filtration',
                 len(f.invariant_edges()))
    return f._replace(order=tuple(order))


def _rebuild(f, kept, vertex_map):
    vertices = []
    for vertex in f.graph.vertices:
        image = vertex_map.get(vertex, vertex)
        if image not in vertices:
            vertices.append(image)
    used = set()
    for index in kept:
        edge = f.graph.edges[index]
        used.update((vertex_map.get(edge.origin, edge.origin),
                     vertex_map.get(edge.terminus, edge.terminus)))
    if used:
        vertices = [vertex for vertex in vertices if vertex in used]
    renumber = {old: new for new, old in enumerate(sorted(kept))}
    edges = []
    for old in sorted(kept):
        edge = f.graph.edges[old]
        edges.append(graphs.Edge(edge.name,
                                 vertex_map.get(edge.origin, edge.origin),
                                 vertex_map.get(edge.terminus, edge.terminus)))
    suffixes = []
    for old in sorted(kept):
        steps = [(renumber[edge], direction)
                 for edge, direction in f.suffixes[old].steps
                 if edge in renumber]
        suffixes.append(graphs.EdgePath(steps).tightened())
    order = [renumber[index] for index in f.order if index in renumber]
    return FilteredRepresentative(graphs.MarkedGraph(vertices, edges),
                                  order, suffixes)


def restrict(f, edge_indices):
    """Return the representative induced on an invariant subgraph.

    :param edge_indices: Edges of the subgraph; its vertices are their
        endpoints.
    :raises freebycyclic.exceptions.ConsistencyError:
        If the image of some edge leaves the subgraph.
    """
    kept = frozenset(edge_indices)
    if not kept:
        raise exceptions.InputError('Cannot restrict to an empty subgraph')
    for index in kept:
        outside = f.suffixes[index].edges_used() - kept
        if outside:
            raise exceptions.ConsistencyError(
                'the image of {0} leaves the subgraph through {1}'.format(
                    f.edge_name(index), f.edge_name(min(outside))))
    return _rebuild(f, kept, {})


def _free_face(f, base_edges):
    for vertex in f.graph.vertices:
        if f.graph.valence(vertex, base_edges) != 1:
            continue
        for index in sorted(base_edges):
            edge = f.graph.edges[index]
            if vertex in (edge.origin, edge.terminus):
                return index, vertex
    return None


def collapse_free_faces(f):
    """Collapse invariant trees hanging off the base level.

    The filtration is normalised first. While some vertex has valence one
    in ``Gamma_i0``, its edge is collapsed onto the other endpoint, so that
    every component of ``Gamma_i0`` ends up a point or a core graph. Steps
    across collapsed edges are dropped from the suffixes.

    :rtype: FilteredRepresentative
    """
    f = normalised(f)
    collapsed = 0
    while True:
        base_edges = f.level(f.base_index())
        face = _free_face(f, base_edges)
        if face is None:
            break
        index, vertex = face
        edge = f.graph.edges[index]
        other = edge.terminus if edge.origin == vertex else edge.origin
        kept = set(range(f.edge_count)) - {index}
        f = normalised(_rebuild(f, kept, {vertex: other}))
        collapsed += 1
    if collapsed:
        log.info('collapsed %d free faces of the invariant level', collapsed)
    return f
