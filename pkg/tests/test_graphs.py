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
"""Tests for graphs, edge paths and markings."""
import pytest

from freebycyclic import exceptions
from freebycyclic import graphs


@pytest.fixture
def bridge_graph(doomed_bridge):
    return doomed_bridge.graph()


def path(graph, text):
    steps = []
    for token in text.split():
        name, _, power = token.partition('^')
        steps.append((graph.edge_index(name), -1 if power else 1))
    return graphs.EdgePath(steps)


def test_rose():
    """Verify the rose on a list of names."""
    rose = graphs.MarkedGraph.rose(['a', 'b'])
    assert rose.is_rose()
    assert rose.vertices == ('v',)
    assert rose.betti_number() == 2
    assert rose.edge_names == ('a', 'b')


def test_graph_rejects_unknown_vertex():
    """Verify that an edge must end at a declared vertex."""
    with pytest.raises(exceptions.InputError):
        graphs.MarkedGraph(['u'], [('a', 'u', 'w')])


def test_graph_rejects_repeated_vertices():
    """Verify that vertex names are distinct."""
    with pytest.raises(exceptions.InputError):
        graphs.MarkedGraph(['u', 'u'], [])


def test_bridge_graph_shape(bridge_graph):
    """Verify vertices, Betti number and valence of the bridge graph."""
    assert bridge_graph.vertices == ('u', 'v', 'w')
    assert bridge_graph.basepoint == 'u'
    assert bridge_graph.is_connected()
    assert bridge_graph.betti_number() == 3
    assert bridge_graph.valence('u') == 6
    assert bridge_graph.valence('v') == 2


def test_components(bridge_graph):
    """Verify the components of a subgraph, edgeless ones last."""
    index = bridge_graph.edge_index
    pieces = bridge_graph.components([index('a'), index('b'), index('e')],
                                     bridge_graph.vertices)
    assert pieces == [
        (frozenset(['u']), frozenset([index('a'), index('b')])),
        (frozenset(['v', 'w']), frozenset([index('e')])),
    ]
    assert bridge_graph.betti_number([index('e')]) == 0


def test_spanning_tree_prefers_order(bridge_graph):
    """Verify that the tree takes edges early in the order."""
    index = bridge_graph.edge_index
    tree = bridge_graph.spanning_tree()
    assert tree == frozenset([index('c'), index('e')])
    order = [index(name) for name in ('a', 'b', 'd', 'e', 'c')]
    assert bridge_graph.spanning_tree(order) == frozenset(
        [index('d'), index('e')])


def test_marking_reads_loops(bridge_graph):
    """Verify generators, tree paths and the reading of a loop."""
    marking = bridge_graph.marking()
    index = bridge_graph.edge_index
    assert marking.basis.generators == ('a', 'b', 'd')
    assert marking.tree_paths['w'] == path(bridge_graph, 'c^-1 e')
    loop = marking.loop(bridge_graph, index('d'))
    assert loop == path(bridge_graph, 'c^-1 e d')
    assert loop.is_closed(bridge_graph, at='u')
    assert marking.read(loop).format(marking.basis) == 'd'


def test_marking_needs_connected_graph():
    """Verify that a disconnected graph has no marking."""
    graph = graphs.MarkedGraph(['u', 'w'], [('a', 'u', 'u'), ('b', 'w', 'w')])
    with pytest.raises(exceptions.InputError):
        graph.marking()


def test_tree_paths_from_another_root(bridge_graph):
    """Verify tree paths rooted away from the basepoint."""
    tree = bridge_graph.spanning_tree()
    paths = bridge_graph.tree_paths(tree, root='w')
    assert paths['w'].is_trivial()
    assert paths['u'] == path(bridge_graph, 'e^-1 c')


def test_edge_path_operations(bridge_graph):
    """Verify inversion, tightening and immersion."""
    loop = path(bridge_graph, 'a b b^-1')
    assert not loop.is_immersed()
    assert loop.tightened() == path(bridge_graph, 'a')
    assert loop.inverse() == path(bridge_graph, 'b b^-1 a^-1')
    assert loop.edges_used() == set([bridge_graph.edge_index('a'),
                                     bridge_graph.edge_index('b')])
    assert path(bridge_graph, 'c^-1 e d').format(bridge_graph) == (
        'c^-1 e d')
    assert graphs.TRIVIAL_PATH.format(bridge_graph) == '1'


def test_incidence_is_checked(bridge_graph):
    """Verify that non-incident steps are reported."""
    with pytest.raises(exceptions.IncidenceError) as excinfo:
        path(bridge_graph, 'a e').check_incident(bridge_graph)
    assert excinfo.value.position == 1


def test_endpoints(bridge_graph):
    """Verify the endpoints of a path and closedness."""
    bridge = path(bridge_graph, 'c^-1 e')
    assert bridge.endpoints(bridge_graph) == ('u', 'w')
    assert not bridge.is_closed(bridge_graph)
    assert graphs.TRIVIAL_PATH.endpoints(bridge_graph) is None
    assert graphs.TRIVIAL_PATH.is_closed(bridge_graph, at='v')
