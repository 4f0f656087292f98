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
"""Tests for filtered representatives."""
import pytest

from freebycyclic import api
from freebycyclic import exceptions
from freebycyclic import graphs
from freebycyclic import representatives
from freebycyclic import specfile

HANGING_TREE = """\
# An invariant edge h leads to a leaf w.
basis: a h b
edge: a u u
edge: h u w
edge: b u u
map: a -> a
map: h -> h
map: b -> b a
"""


def steps(f, text):
    return graphs.EdgePath(
        (f.graph.edge_index(token.split('^')[0]),
         -1 if token.endswith('^-1') else 1)
        for token in text.split())


@pytest.fixture
def bridge(doomed_bridge):
    return api.representative(doomed_bridge)


def test_map_path_tightens(chain):
    """Verify that mapped paths are tightened."""
    f = api.representative(chain)
    image = f.map_path(steps(f, 'c b^-1'))
    assert image.format(f.graph) == 'c b a^-1 b^-1'
    assert f.map_path(steps(f, 'b a^-1')).format(f.graph) == 'b'


def test_tighten_iterates(chain):
    """Verify repeated application of the map."""
    f = api.representative(chain)
    assert representatives.tighten(
        steps(f, 'c'), f, iterations=2).format(f.graph) == 'c b b a'
    assert representatives.tighten(
        steps(f, 'a a^-1 b'), f).format(f.graph) == 'b'


def test_tighten_checks_incidence(two_loops):
    """Verify that tightening refuses a non-path."""
    f = api.representative(two_loops)
    with pytest.raises(exceptions.IncidenceError):
        representatives.tighten(steps(f, 'a x'), f)


def test_nielsen_paths(remark, chain):
    """Verify Nielsen and non-Nielsen suffixes."""
    f = api.representative(remark)
    assert representatives.is_nielsen(f.suffixes[3], f)
    g = api.representative(chain)
    assert not representatives.is_nielsen(g.suffixes[2], g)


def test_nielsen_needs_closed_path(bridge):
    """Verify that an open path is refused."""
    with pytest.raises(exceptions.InputError):
        representatives.is_nielsen(steps(bridge, 'c^-1 e'), bridge)


def test_levels_and_invariant_edges(bridge):
    """Verify filtration levels, the base index and the top edge."""
    names = [bridge.edge_name(index) for index in bridge.invariant_edges()]
    assert names == ['a', 'e']
    assert bridge.base_index() == 1
    assert bridge.edge_name(bridge.top_edge) == 'd'
    assert bridge.level(2) == frozenset([0, 1])
    assert bridge.position(bridge.graph.edge_index('c')) == 3
    assert not bridge.is_all_invariant()


def test_normalised_sinks_invariant_edges(bridge):
    """Verify that invariant edges move to the bottom in order."""
    moved = representatives.normalised(bridge)
    assert [moved.edge_name(index) for index in moved.order] == [
        'a', 'e', 'b', 'c', 'd']
    assert moved.base_index() == 2
    assert moved.suffixes == bridge.suffixes


def test_induced_endomorphism(bridge):
    """Verify the automorphism read through the spanning-tree marking."""
    phi = bridge.induced_endomorphism()
    assert phi.basis.generators == ('a', 'b', 'd')
    assert phi.format_images() == [('a', 'a'), ('b', 'b a'),
                                   ('d', 'b^-1 d b')]


def test_induced_endomorphism_of_rose(remark):
    """Verify that a rose induces the map it was given."""
    phi = api.representative(remark).induced_endomorphism()
    assert phi.images == remark.endomorphism().images


def test_restrict(bridge):
    """Verify the representative induced on an invariant subgraph."""
    index = bridge.graph.edge_index
    rose = representatives.restrict(bridge, [index('a'), index('b')])
    assert rose.graph.vertices == ('u',)
    assert rose.graph.edge_names == ('a', 'b')
    assert rose.format_images() == [('a', 'a'), ('b', 'b a')]


def test_restrict_refuses_leaving_images(bridge):
    """Verify that a subgraph which is not invariant is refused."""
    with pytest.raises(exceptions.ConsistencyError):
        representatives.restrict(bridge, [bridge.graph.edge_index('c')])


def test_restrict_refuses_empty(bridge):
    """Verify that an empty subgraph is refused."""
    with pytest.raises(exceptions.InputError):
        representatives.restrict(bridge, [])


def test_collapse_free_faces():
    """Verify that an invariant tree hanging off the base is collapsed."""
    f = api.representative(specfile.parse_spec(HANGING_TREE))
    collapsed = representatives.collapse_free_faces(f)
    assert collapsed.graph.vertices == ('u',)
    assert collapsed.graph.edge_names == ('a', 'b')
    assert collapsed.format_images() == [('a', 'a'), ('b', 'b a')]


def test_collapse_keeps_core_graphs(remark):
    """Verify that a rose has nothing to collapse."""
    f = api.representative(remark)
    assert representatives.collapse_free_faces(f) == f


REMARK_ROSE = """\
basis: e0 e1 e2 e3 {names}
edge: e0 u u
edge: e1 u u
edge: e2 u u
edge: e3 u u
{edges}
map: e0 -> e0
map: e1 -> e1 e0
map: e2 -> e2 e0
map: e3 -> e3 e0 e1 e2^-1
{maps}
"""

SEGMENT = """\
# The invariant segment s joins the loops a and b.
basis: a s b
edge: a u u
edge: s u v
edge: b v v
map: a -> a
map: s -> s
map: b -> b s^-1 a s
"""


def rose_with_tree(tree):
    return specfile.parse_spec(REMARK_ROSE.format(
        names=' '.join(name for name, _, _ in tree),
        edges='\n'.join('edge: {0} {1} {2}'.format(*edge) for edge in tree),
        maps='\n'.join('map: {0} -> {0}'.format(name)
                       for name, _, _ in tree)))


def betti_by_top_edge(f):
    betti = {}
    for i in range(1, f.edge_count + 1):
        top = f.order[i - 1]
        if not f.is_invariant(top):
            betti[f.edge_name(top)] = f.graph.betti_number(f.level(i))
    return betti


@pytest.mark.parametrize('tree', [
    [('t1', 'u', 'x')],
    [('t1', 'u', 'x'), ('t2', 'u', 'y'), ('t3', 'u', 'z')],
    [('t1', 'u', 'x'), ('t2', 'x', 'y'), ('t3', 'y', 'z')],
    [('t1', 'x', 'u'), ('t2', 'y', 'x'), ('t3', 'x', 'z')],
    [('t1', 'u', 'x'), ('t2', 'x', 'y'), ('t3', 'z', 'x'),
     ('t4', 'u', 'w'), ('t5', 'w', 'v')],
])
def test_collapse_trees_hanging_off_the_rose(remark, tree):
    """Verify that any invariant tree on the rose collapses away."""
    f = api.representative(rose_with_tree(tree))
    collapsed = representatives.collapse_free_faces(f)
    rose = api.representative(remark)
    assert collapsed.graph.vertices == ('u',)
    assert collapsed.graph.edge_names == rose.graph.edge_names
    assert collapsed.format_images() == rose.format_images()
    assert betti_by_top_edge(collapsed) == betti_by_top_edge(f)
    assert collapsed.graph.betti_number() == f.graph.betti_number() == 4


def test_collapse_preserves_betti_numbers_of_each_level():
    """Verify the Betti number below every growing edge survives."""
    f = api.representative(specfile.parse_spec(HANGING_TREE))
    collapsed = representatives.collapse_free_faces(f)
    assert betti_by_top_edge(f) == {'b': 2}
    assert betti_by_top_edge(collapsed) == betti_by_top_edge(f)


def test_collapse_invariant_segment():
    """Verify that a segment between two loops is collapsed to a point."""
    f = api.representative(specfile.parse_spec(SEGMENT))
    collapsed = representatives.collapse_free_faces(f)
    assert collapsed.graph.vertices == ('u',)
    assert collapsed.graph.edge_names == ('a', 'b')
    assert collapsed.format_images() == [('a', 'a'), ('b', 'b a')]
    assert betti_by_top_edge(collapsed) == betti_by_top_edge(f) == {'b': 2}


def test_format_images(chain):
    """Verify images rendered in filtration order."""
    f = api.representative(chain)
    assert f.format_images() == [('a', 'a'), ('b', 'b a'), ('c', 'c b')]


def test_tighten_the_linear_example(remark):
    """Verify that the top edge grows linearly while its suffix is fixed."""
    f = api.representative(remark)
    assert representatives.tighten(steps(f, 'e3'), f,
                                   iterations=3).length == 10
    suffix = steps(f, 'e0 e1 e2^-1')
    assert representatives.tighten(suffix, f, iterations=1) == suffix
    assert representatives.is_nielsen(graphs.EdgePath(), f)
