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
"""Module containing finite graphs, edge paths and spanning-tree markings."""
from collections import deque
from collections import namedtuple

import networkx
from networkx.utils import UnionFind

from . import exceptions
from . import words

__all__ = ('Edge', 'MarkedGraph', 'EdgePath', 'Marking')

ROSE_VERTEX = 'v'


class Edge(namedtuple('Edge', ['name', 'origin', 'terminus'])):
    """An oriented edge of a finite graph."""

    __slots__ = ()


class EdgePath(namedtuple('EdgePath', ['steps'])):
    """Sequence of ``(edge index, direction)`` steps.

    A direction of ``+1`` crosses the edge from origin to terminus and
    ``-1`` crosses it backwards. Incidence is checked against a graph with
    :meth:`check_incident`.
    """

    __slots__ = ()

    def __new__(cls, steps=()):
        """Create a new EdgePath."""
        return super(EdgePath, cls).__new__(cls, tuple(steps))

    @classmethod
    def from_word(cls, word):
        """Build a path from a word over the edge basis."""
        return cls(word.letters)

    @property
    def length(self):
        """Number of steps."""
        return len(self.steps)

    def is_trivial(self):
        """``True`` for the path with no steps."""
        return not self.steps

    def inverse(self):
        """Return the reversed path."""
        return EdgePath((edge, -direction)
                        for edge, direction in reversed(self.steps))

    def concat(self, *others):
        """Concatenate paths without tightening."""
        steps = list(self.steps)
        for other in others:
            steps.extend(other.steps)
        return EdgePath(steps)

    def tightened(self):
        """Remove every backtrack."""
        return EdgePath(words.free_reduce(self.steps).letters)

    def is_immersed(self):
        """``True`` when no step is followed by its reverse."""
        return all(first != (second[0], -second[1])
                   for first, second in zip(self.steps, self.steps[1:]))

    def edges_used(self):
        """Set of edge indices crossed."""
        return set(edge for edge, _ in self.steps)

    def as_word(self):
        """Return the steps as a word over the edge basis."""
        return words.Word(self.steps)

    def check_incident(self, graph):
        """Check that consecutive steps meet.

        :raises freebycyclic.exceptions.IncidenceError:
            At the first step that does not start where the previous ended.
        """
        for position in range(1, len(self.steps)):
            if (graph.step_terminus(self.steps[position - 1]) !=
                    graph.step_origin(self.steps[position])):
                raise exceptions.IncidenceError(self.format(graph), position)
        return self

    def endpoints(self, graph):
        """Return ``(start, end)``, or ``None`` for the trivial path."""
        if not self.steps:
            return None
        return (graph.step_origin(self.steps[0]),
                graph.step_terminus(self.steps[-1]))

    def is_closed(self, graph, at=None):
        """``True`` when the path ends where it starts (at ``at`` if given).

        The trivial path is closed at every vertex.
        """
        ends = self.endpoints(graph)
        if ends is None:
            return True
        start, end = ends
        return start == end and (at is None or start == at)

    def format(self, graph):
        """Render the path with edge names, ``1`` when trivial."""
        return self.as_word().format(graph.edge_basis())


TRIVIAL_PATH = EdgePath()


class Marking(namedtuple('Marking', ['basepoint', 'tree', 'generators',
                                     'basis', 'tree_paths'])):
    """Identification of the fundamental group with a free group.

    .. attribute:: basepoint

        The base vertex.

    .. attribute:: tree

        Frozen set of edge indices of the spanning tree.

    .. attribute:: generators

        Indices of the edges outside the tree, in filtration order. Edge
        ``generators[k]`` is generator ``k`` of :attr:`basis`.

    .. attribute:: basis

        :class:`~freebycyclic.words.FreeBasis` named after those edges.

    .. attribute:: tree_paths

        Mapping of every vertex to the tree path from the basepoint.
    """

    __slots__ = ()

    def read(self, path):
        """Return the word a closed path at the basepoint spells."""
        position = {edge: k for k, edge in enumerate(self.generators)}
        return words.free_reduce(
            (position[edge], direction) for edge, direction in path.steps
            if edge in position)

    def loop(self, graph, edge):
        """Return the closed path at the basepoint through ``edge``."""
        origin = graph.edges[edge].origin
        terminus = graph.edges[edge].terminus
        return self.tree_paths[origin].concat(
            EdgePath(((edge, 1),)), self.tree_paths[terminus].inverse())


class MarkedGraph(namedtuple('MarkedGraph', ['vertices', 'edges'])):
    """Finite graph with named oriented edges.

    .. attribute:: vertices

        Tuple of vertex names; the first is the basepoint.

    .. attribute:: edges

        Tuple of :class:`Edge`.
    """

    __slots__ = ()

    def __new__(cls, vertices, edges):
        """Create a new MarkedGraph, checking names and endpoints."""
        vertices = tuple(vertices)
        edges = tuple(Edge(*edge) for edge in edges)
        if not vertices:
            raise exceptions.InputError('A graph needs at least one vertex')
        if len(set(vertices)) != len(vertices):
            raise exceptions.InputError('Vertex names repeat')
        names = [edge.name for edge in edges]
        if names:
            words.FreeBasis(names)
        known = set(vertices)
        for edge in edges:
            for vertex in (edge.origin, edge.terminus):
                if vertex not in known:
                    raise exceptions.InputError(
                        'Edge {0} ends at unknown vertex {1!r}'.format(
                            edge.name, vertex))
        return super(MarkedGraph, cls).__new__(cls, vertices, edges)

    @classmethod
    def rose(cls, names, vertex=ROSE_VERTEX):
        """Return the graph with one vertex and a loop per name."""
        return cls((vertex,), [Edge(name, vertex, vertex) for name in names])

    @property
    def basepoint(self):
        """The first declared vertex."""
        return self.vertices[0]

    @property
    def edge_names(self):
        """Edge names in declaration order."""
        return tuple(edge.name for edge in self.edges)

    def edge_basis(self):
        """Return a :class:`~freebycyclic.words.FreeBasis` of edge names."""
        return words.FreeBasis(self.edge_names)

    def edge_index(self, name):
        """Return the index of the edge called ``name``."""
        return self.edge_basis().index(name)

    def step_origin(self, step):
        """Vertex a step starts from."""
        edge, direction = step
        if direction > 0:
            return self.edges[edge].origin
        return self.edges[edge].terminus

    def step_terminus(self, step):
        """Vertex a step ends at."""
        edge, direction = step
        if direction > 0:
            return self.edges[edge].terminus
        return self.edges[edge].origin

    def is_rose(self):
        """``True`` for a single vertex."""
        return len(self.vertices) == 1

    def multigraph(self, edge_indices=None, vertices=None):
        """Return a :class:`networkx.MultiGraph` keyed by edge index.

        :param edge_indices: (optional) Restrict to these edges.
        :param vertices: (optional) Vertices to include even when isolated;
            by default every vertex when no restriction is given and only
            incident vertices otherwise.
        """
        graph = networkx.MultiGraph()
        if edge_indices is None:
            edge_indices = range(len(self.edges))
            if vertices is None:
                vertices = self.vertices
        graph.add_nodes_from(vertices or ())
        for index in edge_indices:
            edge = self.edges[index]
            graph.add_edge(edge.origin, edge.terminus, key=index)
        return graph

    def is_connected(self, edge_indices=None):
        """``True`` when the (sub)graph is connected."""
        graph = self.multigraph(edge_indices)
        return graph.number_of_nodes() > 0 and networkx.is_connected(graph)

    def components(self, edge_indices, vertices=None):
        """Split a subgraph into connected components.

        :returns: List of ``(vertex set, edge set)`` pairs of frozen sets,
            ordered by smallest edge index, edgeless components last.
        """
        graph = self.multigraph(edge_indices, vertices)
        pieces = []
        for nodes in networkx.connected_components(graph):
            edges = frozenset(key for _, _, key in
                              graph.subgraph(nodes).edges(keys=True))
            pieces.append((frozenset(nodes), edges))
        pieces.sort(key=lambda piece: (min(piece[1]) if piece[1]
                                       else len(self.edges),
                                       sorted(piece[0])))
        return pieces

    def betti_number(self, edge_indices=None):
        """First Betti number ``E - V + components`` of a subgraph."""
        graph = self.multigraph(edge_indices)
        if graph.number_of_nodes() == 0:
            return 0
        return (graph.number_of_edges() - graph.number_of_nodes() +
                networkx.number_connected_components(graph))

    def valence(self, vertex, edge_indices=None):
        """Number of edge ends at ``vertex`` within a subgraph."""
        if edge_indices is None:
            edge_indices = range(len(self.edges))
        count = 0
        for index in edge_indices:
            edge = self.edges[index]
            count += (edge.origin == vertex) + (edge.terminus == vertex)
        return count

    def spanning_tree(self, order=None):
        """Choose a spanning tree, preferring edges early in ``order``.

        :param order: (optional) Edge indices in preference order, by
            default declaration order.
        :returns: Frozen set of tree edge indices.
        """
        if order is None:
            order = range(len(self.edges))
        forest = UnionFind(self.vertices)
        tree = set()
        for index in order:
            edge = self.edges[index]
            if forest[edge.origin] != forest[edge.terminus]:
                forest.union(edge.origin, edge.terminus)
                tree.add(index)
        return frozenset(tree)

    def marking(self, order=None):
        """Return the spanning-tree :class:`Marking` of this graph.

        Loops outside the tree become the free basis, ordered by ``order``.

        :raises freebycyclic.exceptions.InputError:
            If the graph is not connected.
        """
        if not self.is_connected():
            raise exceptions.InputError(
                'Only a connected graph has a marking')
        if order is None:
            order = tuple(range(len(self.edges)))
        tree = self.spanning_tree(order)
        generators = tuple(index for index in order if index not in tree)
        if not generators:
            raise exceptions.InputError(
                'A tree has trivial fundamental group')
        basis = words.FreeBasis(self.edges[index].name for index in generators)
        return Marking(self.basepoint, tree, generators, basis,
                       self.tree_paths(tree))

    def tree_paths(self, tree, root=None):
        """Map each vertex reached through ``tree`` to its path from ``root``.

        The root defaults to the basepoint; edges are tried in index order.
        """
        if root is None:
            root = self.basepoint
        paths = {root: TRIVIAL_PATH}
        queue = deque([root])
        while queue:
            vertex = queue.popleft()
            for index in sorted(tree):
                for step in ((index, 1), (index, -1)):
                    if self.step_origin(step) != vertex:
                        continue
                    reached = self.step_terminus(step)
                    if reached not in paths:
                        paths[reached] = paths[vertex].concat(
                            EdgePath((step,)))
                        queue.append(reached)
        return paths


def rose_for(basis):
    """Return the rose whose loops are named after ``basis``."""
    return MarkedGraph.rose(basis.generators)
