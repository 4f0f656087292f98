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
"""Graph-of-groups splittings of a mapping torus.

Deleting edges of a filtered representative splits the mapping torus as a
graph of groups. Each removed edge contributes an edge group conjugate to
``<t>``; each component of what remains is a vertex piece.
"""
from collections import namedtuple
import logging

from . import exceptions
from . import graphs
from . import representatives

__all__ = ('VertexPiece', 'SplittingDescriptor', 'topmost_splitting',
           'doomed_split')

log = logging.getLogger(__name__)

TOPMOST_EDGE = 'topmost-edge'
E_SET_REMOVAL = 'e-set-removal'

THICK_VERTEX = 'thick-vertex'
EDGE_GROUP_CONJUGATE = 'edge-group-conjugate'

HNN = 'hnn'
AMALGAM = 'amalgam'


class VertexPiece(namedtuple('VertexPiece', [
        'edges', 'vertices', 'representative', 'classification', 'betti'])):
    """One component left after removing edges.

    .. attribute:: edges

        Tuple of edge names of the component.

    .. attribute:: vertices

        Tuple of vertex names.

    .. attribute:: representative

        The induced
        :class:`~freebycyclic.representatives.FilteredRepresentative`, or
        ``None`` for a component without edges.

    .. attribute:: classification

        ``'thick-vertex'`` for a non-simply-connected component, otherwise
        ``'edge-group-conjugate'``.

    .. attribute:: betti

        First Betti number of the component.
    """

    __slots__ = ()

    @property
    def is_thick(self):
        """``True`` for a vertex piece that carries a mapping torus."""
        return self.classification == THICK_VERTEX


class SplittingDescriptor(namedtuple('SplittingDescriptor', [
        'kind', 'graph_kind', 'removed', 'pieces', 'edge_groups',
        'relations', 'doomed_edges', 'doomed_vertices'])):
    """Combinatorial description of a splitting.

    .. attribute:: kind

        ``'topmost-edge'`` or ``'e-set-removal'``.

    .. attribute:: graph_kind

        ``'hnn'`` or ``'amalgam'`` for a topmost-edge splitting, else
        ``None``.

    .. attribute:: removed

        Names of the removed edges.

    .. attribute:: pieces

        Tuple of :class:`VertexPiece`.

    .. attribute:: edge_groups

        One description per removed edge.

    .. attribute:: relations

        Rendered relations ``e^-1 t e = p t`` for removed edges.

    .. attribute:: doomed_edges

        Names of doomed edges, for E-set removal.

    .. attribute:: doomed_vertices

        Names of doomed vertices, for E-set removal.
    """

    __slots__ = ()

    @property
    def thick_pieces(self):
        """Pieces that carry lower mapping tori."""
        return [piece for piece in self.pieces if piece.is_thick]


def _edge_group(name):
    return 'edge {0}: conjugate to <t>'.format(name)


def _relation(f, index):
    name = f.edge_name(index)
    suffix = f.suffixes[index].format(f.graph)
    return '{0}^-1 t {0} = {1} t'.format(name, suffix)


def _pieces(f, kept, vertices):
    pieces = []
    for component_vertices, component_edges in f.graph.components(
            kept, vertices):
        betti = f.graph.betti_number(component_edges) if component_edges else 0
        if component_edges:
            piece_rep = representatives.restrict(f, component_edges)
        else:
            piece_rep = None
        classification = THICK_VERTEX if betti > 0 else EDGE_GROUP_CONJUGATE
        pieces.append(VertexPiece(
            tuple(f.edge_name(index) for index in f.order
                  if index in component_edges),
            tuple(vertex for vertex in f.graph.vertices
                  if vertex in component_vertices),
            piece_rep, classification, betti))
    return tuple(pieces)


def _check_cover(f, removed, pieces):
    covered = set(name for piece in pieces for name in piece.edges)
    covered.update(f.edge_name(index) for index in removed)
    if covered != set(f.graph.edge_names):
        raise exceptions.ConsistencyError(
            'removed edges and vertex pieces do not cover the graph')


def topmost_splitting(f):
    """Split off the topmost edge.

    :param f: A verified
        :class:`~freebycyclic.representatives.FilteredRepresentative`.
    :rtype: SplittingDescriptor
    :raises freebycyclic.exceptions.BaseCaseError:
        If every edge is invariant.
    """
    f = representatives.normalised(f)
    if f.is_all_invariant():
        raise exceptions.BaseCaseError(f.edge_count)
    top = f.top_edge
    kept = [index for index in f.order if index != top]
    pieces = _pieces(f, kept, f.graph.vertices)
    _check_cover(f, [top], pieces)
    if not 1 <= len(pieces) <= 2:
        raise exceptions.ConsistencyError(
            'removing one edge left {0} pieces'.format(len(pieces)))
    if sum(1 for piece in pieces if not piece.is_thick) > 1:
        raise exceptions.ConsistencyError(
            'more than one simply-connected piece after removing one edge')
    graph_kind = HNN if len(pieces) == 1 else AMALGAM
    log.info('topmost splitting at %s: %s with %d pieces',
             f.edge_name(top), graph_kind, len(pieces))
    return SplittingDescriptor(
        TOPMOST_EDGE, graph_kind, (f.edge_name(top),), pieces,
        (_edge_group(f.edge_name(top)),), (_relation(f, top),), (), ())


def doomed_edges(f, table):
    """Return the doomed edge indices.

    An edge is doomed when it lies in ``E``, or has lower degree and the
    largest connected subgraph containing it that avoids ``E`` is simply
    connected.
    """
    e_set = table.e_set
    free = [index for index in f.order if index not in e_set]
    doomed = set(e_set)
    for _, component_edges in f.graph.components(free):
        if f.graph.betti_number(component_edges) == 0:
            doomed.update(component_edges)
    return frozenset(doomed)


def doomed_vertices(f, doomed):
    """Vertices all of whose incident edges are doomed."""
    result = []
    for vertex in f.graph.vertices:
        incident = [index for index, edge in enumerate(f.graph.edges)
                    if vertex in (edge.origin, edge.terminus)]
        if incident and all(index in doomed for index in incident):
            result.append(vertex)
    return tuple(result)


def check_invariant(f, edge_indices):
    """Assert that every edge image stays inside the given edges.

    :raises freebycyclic.exceptions.ConsistencyError:
        Naming the first edge whose image leaves.
    """
    kept = frozenset(edge_indices)
    for index in sorted(kept):
        image = f.map_path(graphs.EdgePath(((index, 1),)))
        outside = image.edges_used() - kept
        if outside:
            raise exceptions.ConsistencyError(
                'the image of {0} leaves the remaining subgraph'.format(
                    f.edge_name(index)))
    return True


def doomed_split(f, table):
    """Remove the doomed edges and vertices of a degree ``>= 2`` map.

    :param f: A verified
        :class:`~freebycyclic.representatives.FilteredRepresentative`.
    :param table: Its :class:`~freebycyclic.edge_growth.GrowthTable`.
    :rtype: SplittingDescriptor
    :raises freebycyclic.exceptions.UnsupportedGrowth:
        If the degree is below 2.
    :raises freebycyclic.exceptions.ConsistencyError:
        If a remaining component is not invariant, or a doomed edge
        outside ``E`` moves.
    """
    if table.eta < 2:
        raise exceptions.UnsupportedGrowth(table.eta, 'at least 2')
    f = table.representative
    doomed = doomed_edges(f, table)
    for index in sorted(doomed - table.e_set):
        if not f.is_invariant(index):
            raise exceptions.ConsistencyError(
                'doomed edge {0} outside E is not invariant'.format(
                    f.edge_name(index)))
    dead_vertices = doomed_vertices(f, doomed)
    kept = [index for index in f.order if index not in doomed]
    check_invariant(f, kept)
    pieces = _pieces(f, kept, None) if kept else ()
    removed = [index for index in f.order if index in table.e_set]
    _check_cover(f, doomed, pieces)
    log.info('doomed split: E=%s, doomed=%s, %d pieces',
             [f.edge_name(index) for index in removed],
             [f.edge_name(index) for index in f.order if index in doomed],
             len(pieces))
    return SplittingDescriptor(
        E_SET_REMOVAL, None, tuple(f.edge_name(index) for index in removed),
        pieces, tuple(_edge_group(f.edge_name(index)) for index in removed),
        tuple(_relation(f, index) for index in removed),
        tuple(f.edge_name(index) for index in f.order if index in doomed),
        dead_vertices)
