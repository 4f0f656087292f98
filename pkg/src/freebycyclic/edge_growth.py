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
"""Growth degrees of the edges of a filtered representative."""
from collections import namedtuple
import logging

from . import exceptions
from . import graphs
from . import growth
from . import misc
from . import representatives
from . import transitions

__all__ = ('GrowthTable', 'edge_growth_degrees', 'orbit_lengths',
           'suffix_edges', 'e_set_witnesses')

log = logging.getLogger(__name__)


class GrowthTable(namedtuple('GrowthTable', [
        'representative', 'degrees', 'recursive_degrees', 'eta', 'e_set',
        'base_index', 'profiles'])):
    """Per-edge polynomial growth degrees.

    .. attribute:: representative

        The normalised representative the table describes.

    .. attribute:: degrees

        Tuple of degrees indexed by edge, from the slope fit of
        ``len(f**n (e))``.

    .. attribute:: recursive_degrees

        Tuple indexed by edge: ``0`` for invariant edges, otherwise one
        more than the degree of the suffix orbit.

    .. attribute:: eta

        Largest degree.

    .. attribute:: e_set

        Frozen set of edges of degree ``eta``.

    .. attribute:: base_index

        Number of edges in the invariant base level ``Gamma_i0``.

    .. attribute:: profiles

        Tuple of classified :class:`~freebycyclic.growth.GrowthProfile`
        indexed by edge.
    """

    __slots__ = ()

    def degree_of(self, name):
        """Return the degree of the edge called ``name``."""
        return self.degrees[self.representative.graph.edge_index(name)]

    def edges_of_degree(self, degree):
        """Edges of the given degree in filtration order."""
        return [index for index in self.representative.order
                if self.degrees[index] == degree]


def orbit_lengths(f, path, max_n, word_cap=None):
    """Return ``[(n, len(f**n (path)))]`` for ``1 <= n <= max_n``.

    Sampling stops early, without error, when a path outgrows
    ``word_cap``; the second return value reports that.
    """
    if word_cap is None:
        word_cap = misc.Budgets.from_environ().word_cap
    samples = []
    truncated = False
    for n in range(1, max_n + 1):
        path = f.map_path(path)
        if path.length > word_cap:
            truncated = True
            break
        samples.append((n, path.length))
    return samples, truncated


def _orbit_degree(f, index, path, max_n, word_cap, bound, radius):
    samples, truncated = orbit_lengths(f, path, max_n, word_cap)
    profile = growth.classify_samples(samples, bound, truncated=truncated,
                                      spectral_radius=radius)
    if not profile.is_polynomial:
        raise exceptions.InconclusiveGrowth(f.edge_name(index), profile)
    return profile


def edge_growth_degrees(f, max_n=misc.DEFAULT_MAX_N, word_cap=None):
    """Compute the growth degree of every edge.

    The degree of ``e`` is fitted from ``len(f**n (e))``. The recursion
    ``d = 1 + degree of the orbit of p`` (``0`` for invariant edges) is
    computed alongside; a Nielsen suffix has an orbit of degree ``0``.

    :param f: A verified
        :class:`~freebycyclic.representatives.FilteredRepresentative`.
    :param int max_n: Sample horizon.
    :rtype: GrowthTable
    :raises freebycyclic.exceptions.InconclusiveGrowth:
        If some edge has no clear polynomial degree.
    :raises freebycyclic.exceptions.ConsistencyError:
        If the fit and the recursion disagree.
    """
    f = representatives.normalised(f)
    bound = f.edge_count
    radius = transitions.transition_analysis(f).spectral_radius
    degrees = [0] * f.edge_count
    recursive = [0] * f.edge_count
    profiles = [None] * f.edge_count
    for index in f.order:
        edge_path = graphs.EdgePath(((index, 1),))
        profile = _orbit_degree(f, index, edge_path, max_n, word_cap, bound,
                                radius)
        profiles[index] = profile
        degrees[index] = profile.eta
        if not f.is_invariant(index):
            suffix_profile = _orbit_degree(
                f, index, f.suffixes[index], max_n, word_cap, bound, radius)
            recursive[index] = 1 + suffix_profile.eta
        if degrees[index] != recursive[index]:
            raise exceptions.ConsistencyError(
                'edge {0} has fitted degree {1} but recursive degree '
                '{2}'.format(f.edge_name(index), degrees[index],
                             recursive[index]))
        log.debug('edge %s has degree %d', f.edge_name(index), degrees[index])
    eta = max(degrees) if degrees else 0
    e_set = frozenset(index for index in f.order if degrees[index] == eta)
    table = GrowthTable(f, tuple(degrees), tuple(recursive), eta, e_set,
                        f.base_index(), tuple(profiles))
    log.info('edge growth: eta=%d, E=%s, i0=%d', eta,
             sorted(f.edge_name(index) for index in e_set), table.base_index)
    return table


def suffix_edges(f, index):
    """Edges met by the orbit of the suffix of ``index``.

    Images of lower edges stay below them, so this is the closure of the
    suffix's edges under taking suffix edges.
    """
    seen = set()
    stack = sorted(f.suffixes[index].edges_used())
    while stack:
        edge = stack.pop()
        if edge in seen:
            continue
        seen.add(edge)
        stack.extend(f.suffixes[edge].edges_used() - seen)
    return frozenset(seen)


def e_set_witnesses(table):
    """Map each edge of ``E`` to the edges of degree ``eta - 1`` it maps over.

    :returns: Dictionary of edge index to a sorted tuple of edge indices;
        empty when ``eta`` is ``0``.
    """
    if table.eta == 0:
        return {}
    f = table.representative
    return {
        index: tuple(sorted(edge for edge in suffix_edges(f, index)
                            if table.degrees[edge] == table.eta - 1))
        for index in sorted(table.e_set)
    }
