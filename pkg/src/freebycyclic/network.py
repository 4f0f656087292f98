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
"""Networks of wide subgroups for linearly growing mapping tori.

A network has two kinds of member. Sub-mapping tori come from invariant
components of the base level, and tori ``<t_v, p>`` come from Nielsen
suffixes. Two members are adjacent when an explicit element of infinite
order lies in both.
"""
from collections import namedtuple
import logging
import warnings

import networkx

from . import edge_growth
from . import endomorphisms
from . import exceptions
from . import folding
from . import graphs
from . import misc
from . import normal_form
from . import representatives

__all__ = ('SubMappingTorus', 'TorusSubgroup', 'Adjacency', 'Network',
           'build_tori', 'build_network', 'verify_witness', 'is_member')

log = logging.getLogger(__name__)


class SubMappingTorus(namedtuple('SubMappingTorus', [
        'index', 'vertices', 'edges', 'basepoint', 'stable',
        'fiber_generators'])):
    """Mapping torus of an invariant component of the base level.

    .. attribute:: index

        Position among the sub-mapping tori, counting from 1.

    .. attribute:: vertices

        Vertex names of the component.

    .. attribute:: edges

        Edge names of the component.

    .. attribute:: basepoint

        Vertex the fiber generators are read at.

    .. attribute:: stable

        :class:`~freebycyclic.normal_form.NormalForm` of t-exponent one.

    .. attribute:: fiber_generators

        Tuple of :class:`~freebycyclic.words.Word` generating the fiber.
    """

    __slots__ = ()

    @property
    def label(self):
        """Name used in adjacency lists."""
        return 'W0.{0}'.format(self.index)

    def nielsen_words(self):
        """Sub-mapping tori carry no Nielsen word."""
        return ()


class TorusSubgroup(namedtuple('TorusSubgroup', [
        'index', 'edge', 'vertex', 'stable', 'nielsen', 'host'])):
    """Free abelian subgroup ``<t_v, p>`` for a linear edge.

    .. attribute:: index

        Filtration position of the edge, counting from 1.

    .. attribute:: edge

        Name of the edge whose suffix gives the Nielsen word.

    .. attribute:: vertex

        The vertex ``v`` the suffix is based at.

    .. attribute:: stable

        :class:`~freebycyclic.normal_form.NormalForm` ``t_v``.

    .. attribute:: nielsen

        The Nielsen word ``p`` read through the marking.

    .. attribute:: host

        Index of the sub-mapping torus containing ``v``, or ``None``.
    """

    __slots__ = ()

    @property
    def label(self):
        """Name used in adjacency lists."""
        return 'T({0})'.format(self.edge)

    @property
    def fiber_generators(self):
        """The fiber of a torus is generated by its Nielsen word."""
        return (self.nielsen,)

    def nielsen_words(self):
        """Return ``(p,)``."""
        return (self.nielsen,)


class Adjacency(namedtuple('Adjacency', ['left', 'right', 'witness'])):
    """Two members sharing the infinite-order element ``witness``."""

    __slots__ = ()


class Network(namedtuple('Network', [
        'phi', 'eta', 'w0', 'w1', 'adjacency', 'connected', 'chain_bound'])):
    """Members and adjacencies certifying order-one thickness.

    .. attribute:: phi

        The certified automorphism induced on the fundamental group.

    .. attribute:: eta

        Largest edge growth degree, ``0`` or ``1``.

    .. attribute:: w0

        Tuple of :class:`SubMappingTorus`.

    .. attribute:: w1

        Tuple of :class:`TorusSubgroup`.

    .. attribute:: adjacency

        Tuple of :class:`Adjacency` with verified witnesses.

    .. attribute:: connected

        ``True`` when every member is chained to every other.

    .. attribute:: chain_bound

        Diameter of the adjacency graph, ``None`` when disconnected.
    """

    __slots__ = ()

    @property
    def members(self):
        """All members, sub-mapping tori first."""
        return self.w0 + self.w1

    def member(self, label):
        """Return the member called ``label``."""
        for member in self.members:
            if member.label == label:
                return member
        raise KeyError(label)

    def adjacency_graph(self):
        """Return the adjacency relation as a :class:`networkx.Graph`."""
        graph = networkx.Graph()
        graph.add_nodes_from(member.label for member in self.members)
        for link in self.adjacency:
            graph.add_edge(link.left, link.right, witness=link.witness)
        return graph


def stable_element(f, marking, vertex):
    """Return ``t_v``, the stable letter transported to ``vertex``.

    With ``g`` the tree path to ``vertex``, this is the loop
    ``g f(g)^-1`` followed by ``t``.
    """
    gamma = marking.tree_paths[vertex]
    loop = gamma.concat(f.map_path(gamma).inverse())
    return normal_form.NormalForm(marking.read(loop), 1)


def is_member(torus, member, element):
    """Decide whether ``element`` lies in ``member``.

    Every member is ``K x| <s>`` with ``s`` of t-exponent one, so
    ``element * s**-k`` must lie in the fiber subgroup ``K``.
    """
    shifted = torus.product(element,
                            torus.power(member.stable, -element.t_exp))
    if shifted.t_exp:
        raise exceptions.ConsistencyError(
            'member {0} has a stable element of t-exponent {1}'.format(
                member.label, member.stable.t_exp))
    return folding.stallings_membership(member.fiber_generators,
                                        shifted.fiber)


def _check_normalised(torus, member):
    graph = folding.fold(member.fiber_generators)
    for by in (member.stable, torus.inverse(member.stable)):
        for generator in member.fiber_generators:
            image = torus.conjugate(torus.fiber_element(generator), by)
            if image.t_exp or not graph.contains(image.fiber):
                raise exceptions.ConsistencyError(
                    'the stable element of {0} does not normalise its '
                    'fiber'.format(member.label))


def verify_witness(torus, left, right, element):
    """``True`` when ``element`` has infinite order and lies in both."""
    return (element.has_infinite_order() and
            is_member(torus, left, element) and
            is_member(torus, right, element))


def _candidates(torus, left, right):
    yield torus.stable_element()
    yield left.stable
    yield right.stable
    for member in (left, right):
        for word in member.nielsen_words():
            element = torus.fiber_element(word)
            yield element
            yield torus.power(element, 2)
    for member in (left, right):
        for word in member.fiber_generators:
            yield torus.fiber_element(word)


def find_witness(torus, left, right):
    """Return the first verified common element, or ``None``."""
    for element in _candidates(torus, left, right):
        if verify_witness(torus, left, right, element):
            return element
    return None


def sub_mapping_tori(f, marking, torus):
    """Build the sub-mapping tori of the invariant base level."""
    base = f.level(f.base_index())
    members = []
    for vertices, edges in f.graph.components(base):
        if f.graph.betti_number(edges) == 0:
            continue
        order = [index for index in f.order if index in edges]
        root = next(vertex for vertex in f.graph.vertices
                    if vertex in vertices)
        tree = f.graph.spanning_tree(order)
        sigma = f.graph.tree_paths(tree, root)
        gamma = marking.tree_paths[root]
        generators = []
        for index in order:
            if index in tree:
                continue
            edge = f.graph.edges[index]
            loop = gamma.concat(sigma[edge.origin],
                                graphs.EdgePath(((index, 1),)),
                                sigma[edge.terminus].inverse(),
                                gamma.inverse())
            generators.append(marking.read(loop))
        member = SubMappingTorus(
            len(members) + 1,
            tuple(vertex for vertex in f.graph.vertices if vertex in vertices),
            tuple(f.edge_name(index) for index in order), root,
            stable_element(f, marking, root), tuple(generators))
        _check_normalised(torus, member)
        members.append(member)
    return members


def _nielsen_suffix(f, index):
    try:
        return representatives.is_nielsen(f.suffixes[index], f)
    except exceptions.InputError:
        return False


def _tori(f, marking, torus, w0):
    tori = []
    for index in f.order:
        if f.is_invariant(index):
            continue
        if not _nielsen_suffix(f, index):
            raise exceptions.NotNielsenPath(f.edge_name(index))
        vertex = f.graph.edges[index].terminus
        gamma = marking.tree_paths[vertex]
        word = marking.read(gamma.concat(f.suffixes[index], gamma.inverse()))
        stable = stable_element(f, marking, vertex)
        nielsen = torus.fiber_element(word)
        if not torus.commute(stable, nielsen):
            raise exceptions.ConsistencyError(
                'the torus of {0} is not abelian'.format(f.edge_name(index)))
        host = next((member.index for member in w0
                     if vertex in member.vertices), None)
        tori.append(TorusSubgroup(f.position(index), f.edge_name(index),
                                  vertex, stable, word, host))
        log.debug('torus for %s: <%s, %s>', f.edge_name(index),
                  torus.format(stable), torus.format(nielsen))
    return tori


def _setup(f):
    f = representatives.normalised(f)
    marking = f.graph.marking(f.order)
    phi = endomorphisms.certified(f.induced_endomorphism())
    return f, marking, normal_form.MappingTorus(phi)


def build_tori(f):
    """Return the tori of the non-invariant edges.

    :param f: A verified linear-growth
        :class:`~freebycyclic.representatives.FilteredRepresentative`.
    :rtype: list of TorusSubgroup
    :raises freebycyclic.exceptions.NotNielsenPath:
        If some suffix is not a Nielsen path.
    """
    f, marking, torus = _setup(f)
    return _tori(f, marking, torus, sub_mapping_tori(f, marking, torus))


def build_network(f, max_n=misc.DEFAULT_MAX_N, word_cap=None):
    """Assemble the network of a linear-growth representative.

    Free faces of the base level are collapsed first. Every pair of
    members is searched for a witness: ``t``, then the members' stable
    elements, then Nielsen words and their squares, then fiber
    generators.

    :param f: A verified
        :class:`~freebycyclic.representatives.FilteredRepresentative`.
    :param int max_n: Horizon for the growth degrees.
    :rtype: Network
    :raises freebycyclic.exceptions.NotLinear:
        If some edge grows faster than linearly.
    :raises freebycyclic.exceptions.ConsistencyError:
        If no invariant component carries a sub-mapping torus.
    """
    f = representatives.collapse_free_faces(f)
    table = edge_growth.edge_growth_degrees(f, max_n, word_cap)
    if table.eta > 1:
        raise exceptions.NotLinear(table.eta)
    f, marking, torus = _setup(table.representative)
    w0 = sub_mapping_tori(f, marking, torus)
    if not w0:
        raise exceptions.ConsistencyError(
            'no invariant component carries a sub-mapping torus')
    w1 = _tori(f, marking, torus, w0)
    members = w0 + w1
    adjacency = []
    for position, left in enumerate(members):
        for right in members[position + 1:]:
            witness = find_witness(torus, left, right)
            if witness is not None:
                adjacency.append(Adjacency(left.label, right.label, witness))
    network = Network(torus.phi, table.eta, tuple(w0), tuple(w1),
                      tuple(adjacency), False, None)
    graph = network.adjacency_graph()
    if networkx.is_connected(graph):
        network = network._replace(connected=True,
                                   chain_bound=networkx.diameter(graph))
    else:
        warnings.warn(
            'The network splits into {0} parts that share no verified '
            'element.'.format(networkx.number_connected_components(graph)),
            exceptions.IncompleteNetworkWarning)
    log.info('network: %d sub-mapping tori, %d tori, %d adjacencies, '
             'chain bound %s', len(w0), len(w1), len(adjacency),
             network.chain_bound)
    return network
