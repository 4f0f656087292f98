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
"""Thickness certificates for polynomially growing mapping tori.

A certificate is a tree. Leaves are direct products ``F x <t>`` of order
zero. A linear node carries a network of wide subgroups. A node of higher
degree removes the doomed edges and certifies what remains.

Certificates hold rendered strings and integers only, so that a report can
be read back into an equal certificate.
"""
from collections import namedtuple
import logging

from . import edge_growth
from . import endomorphisms
from . import exceptions
from . import growth
from . import misc
from . import network as networks
from . import representatives
from . import splittings
from . import validators

__all__ = ('SplittingSummary', 'NetworkSummary', 'ThicknessCertificate',
           'require_polynomial', 'certify_thickness')

log = logging.getLogger(__name__)

ORDER0_PRODUCT = 'order0-product'
SPLITTING = 'splitting'

QUASICONVEXITY = ('vertex groups, tori and sub-mapping tori are undistorted; '
                  'cited, not re-verified')
DIVERGENCE_LOWER_BOUND = ('divergence is polynomial of degree at least '
                          'eta + 1; cited, not recomputed')
LINEAR_ORDER = 'linear pieces are thick of order 1, so the order is eta'


class SplittingSummary(namedtuple('SplittingSummary', [
        'kind', 'graph_kind', 'removed', 'relations', 'edge_groups',
        'doomed_edges', 'doomed_vertices', 'pieces'])):
    """Rendered :class:`~freebycyclic.splittings.SplittingDescriptor`."""

    __slots__ = ()

    @classmethod
    def from_descriptor(cls, descriptor):
        """Render a splitting descriptor."""
        return cls(descriptor.kind, descriptor.graph_kind,
                   tuple(descriptor.removed), tuple(descriptor.relations),
                   tuple(descriptor.edge_groups),
                   tuple(descriptor.doomed_edges),
                   tuple(descriptor.doomed_vertices),
                   tuple(_describe_piece(piece)
                         for piece in descriptor.pieces))


class NetworkSummary(namedtuple('NetworkSummary', [
        'w0', 'w1', 'adjacency', 'connected', 'chain_bound'])):
    """Rendered :class:`~freebycyclic.network.Network`.

    Members render as ``label = <generators>`` and adjacencies as
    ``left ~ right via witness``.
    """

    __slots__ = ()

    @classmethod
    def from_network(cls, network):
        """Render a network."""
        basis = network.phi.basis
        stable = basis.stable_letter()

        def element(value):
            return value.format(basis, stable)

        def word(value):
            return value.format(basis)

        w0 = tuple(
            '{0} = <{1}>'.format(member.label, ', '.join(
                [word(generator) for generator in member.fiber_generators] +
                [element(member.stable)]))
            for member in network.w0)
        w1 = tuple(
            '{0} = <{1}, {2}>'.format(member.label, element(member.stable),
                                      word(member.nielsen))
            for member in network.w1)
        adjacency = tuple(
            '{0} ~ {1} via {2}'.format(link.left, link.right,
                                       element(link.witness))
            for link in network.adjacency)
        return cls(w0, w1, adjacency, network.connected, network.chain_bound)


class ThicknessCertificate(namedtuple('ThicknessCertificate', [
        'kind', 'order', 'eta', 'power', 'edges', 'witness', 'splitting',
        'network', 'e_witnesses', 'citations', 'children'])):
    """Node of a thickness certificate.

    .. attribute:: kind

        ``'order0-product'`` or ``'splitting'``.

    .. attribute:: order

        Order of thickness certified.

    .. attribute:: eta

        Largest edge growth degree; the divergence lower bound is a
        polynomial of degree ``eta + 1``.

    .. attribute:: power

        The map is a representative of ``phi**power``.

    .. attribute:: edges

        Edge names of the representative, in filtration order.

    .. attribute:: witness

        Direct-product witness of a leaf, ``F(...) x <t>``.

    .. attribute:: splitting

        :class:`SplittingSummary` of a splitting node.

    .. attribute:: network

        :class:`NetworkSummary` of a linear node.

    .. attribute:: e_witnesses

        ``'e: d1 d2'`` entries naming the degree ``eta - 1`` edges each
        top-degree edge maps over.

    .. attribute:: citations

        Results relied on but not re-verified.

    .. attribute:: children

        Certificates of the thick vertex pieces.
    """

    __slots__ = ()

    def __new__(cls, kind, order, eta, power=1, edges=(), witness=None,
                splitting=None, network=None, e_witnesses=(), citations=(),
                children=()):
        """Create a new ThicknessCertificate."""
        return super(ThicknessCertificate, cls).__new__(
            cls, kind, order, eta, power, tuple(edges), witness, splitting,
            network, tuple(e_witnesses), tuple(citations), tuple(children))

    @property
    def is_leaf(self):
        """``True`` for an order-zero product."""
        return self.kind == ORDER0_PRODUCT

    def walk(self):
        """Yield this node and its descendants depth first."""
        yield self
        for child in self.children:
            for node in child.walk():
                yield node


def _describe_piece(piece):
    return '{0} at {1}: {2}'.format(' '.join(piece.edges) or '-',
                                    ' '.join(piece.vertices),
                                    piece.classification)


def _e_witnesses(table):
    f = table.representative
    return tuple(
        '{0}: {1}'.format(f.edge_name(index),
                          ' '.join(f.edge_name(edge) for edge in edges) or '-')
        for index, edges in sorted(edge_growth.e_set_witnesses(table).items(),
                                   key=lambda item: f.position(item[0])))


def _edges(f):
    return tuple(f.edge_name(index) for index in f.order)


def _leaf(f, power):
    phi = f.induced_endomorphism()
    if not phi.is_identity():
        raise exceptions.ConsistencyError(
            'an all-invariant map induces a non-identity automorphism')
    witness = 'F({0}) x <{1}>'.format(', '.join(phi.basis.generators),
                                     phi.basis.stable_letter())
    return ThicknessCertificate(ORDER0_PRODUCT, 0, 0, power, _edges(f),
                                witness=witness)


def _linear(f, table, max_n, word_cap, power):
    found = networks.build_network(f, max_n, word_cap)
    split = splittings.topmost_splitting(table.representative)
    return ThicknessCertificate(
        SPLITTING, 1, 1, power, _edges(table.representative),
        splitting=SplittingSummary.from_descriptor(split),
        network=NetworkSummary.from_network(found),
        e_witnesses=_e_witnesses(table), citations=(QUASICONVEXITY,))


def _reverified(piece):
    rep = piece.representative
    candidate = validators.Candidate.from_suffixes(rep.graph, rep.order,
                                                   rep.suffixes)
    return validators.verify_representative(candidate)


def _linear_order(children):
    orders = [node.order for child in children for node in child.walk()
              if node.eta == 1]
    return max(orders) if orders else 1


def _certify(f, table, max_n, word_cap, power):
    if table.eta == 0:
        return _leaf(table.representative, power)
    if table.eta == 1:
        return _linear(f, table, max_n, word_cap, power)
    split = splittings.doomed_split(f, table)
    children = []
    for piece in split.thick_pieces:
        rep = _reverified(piece)
        child_table = edge_growth.edge_growth_degrees(rep, max_n, word_cap)
        children.append(_certify(rep, child_table, max_n, word_cap, power))
    order = table.eta - 1 + _linear_order(children)
    if order != table.eta:
        raise exceptions.ConsistencyError(
            'certified order {0} differs from the degree {1}'.format(
                order, table.eta))
    if children and order > 1 + max(child.order for child in children):
        raise exceptions.ConsistencyError(
            'order {0} exceeds one more than every child order'.format(order))
    log.info('degree %d node over %s with %d children', table.eta,
             ', '.join(_edges(table.representative)), len(children))
    return ThicknessCertificate(
        SPLITTING, order, table.eta, power, _edges(table.representative),
        splitting=SplittingSummary.from_descriptor(split),
        e_witnesses=_e_witnesses(table),
        citations=(QUASICONVEXITY, LINEAR_ORDER), children=children)


def require_polynomial(profile):
    """Return a polynomial profile, refusing any other classification.

    :raises freebycyclic.exceptions.ExponentialGrowthRefused:
        If the profile is exponential.
    :raises freebycyclic.exceptions.InconclusiveGrowth:
        If the profile has no clear degree.
    """
    if profile.is_exponential:
        raise exceptions.ExponentialGrowthRefused(profile)
    if not profile.is_polynomial:
        raise exceptions.InconclusiveGrowth(None, profile)
    return profile


def certify_thickness(f, max_n=misc.DEFAULT_MAX_N, word_cap=None, power=1):
    """Certify that the mapping torus is strongly thick of order ``eta``.

    :param f: A verified
        :class:`~freebycyclic.representatives.FilteredRepresentative` of
        ``phi**power``.
    :param int max_n: Horizon for growth sampling.
    :param int word_cap: (optional) Longest word sampling may build.
    :param int power: Recorded exponent of the represented map.
    :rtype: ThicknessCertificate
    :raises freebycyclic.exceptions.ExponentialGrowthRefused:
        If the induced automorphism grows exponentially.
    :raises freebycyclic.exceptions.InconclusiveGrowth:
        If its growth cannot be classified.
    :raises freebycyclic.exceptions.VerificationError:
        If the edge growth degree differs from that of the automorphism.
    :raises freebycyclic.exceptions.ConsistencyError:
        If an internal check of the construction fails.
    """
    phi = endomorphisms.certified(f.induced_endomorphism())
    profile = require_polynomial(growth.growth_degree(phi, max_n, word_cap))
    f = representatives.normalised(f)
    table = edge_growth.edge_growth_degrees(f, max_n, word_cap)
    if table.eta != profile.eta:
        raise exceptions.VerificationError(
            'The edges grow with degree {0} but the automorphism grows with '
            'degree {1}; the graph map does not represent its '
            'growth.'.format(table.eta, profile.eta))
    certificate = _certify(f, table, max_n, word_cap, power)
    root = certificate._replace(
        citations=certificate.citations + (DIVERGENCE_LOWER_BOUND,))
    log.info('certified order %d for degree %d', root.order, root.eta)
    return root
