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
"""Cayley balls and the divergence statistic of a mapping torus.

Distances are measured in the word metric over the fiber basis and the
stable letter. The divergence ``chi(r)`` is the longest shortest path
between two points of the ``r``-sphere about the identity that stays out
of the open ball of radius ``r // 2``.
"""
from collections import namedtuple
import logging

import numpy
from scipy import sparse
from scipy.sparse import csgraph

from . import endomorphisms
from . import exceptions
from . import misc
from . import normal_form
from . import words

__all__ = ('CayleyBall', 'DivergenceSample', 'ball', 'divergence_chi',
           'verify_sample', 'DISCONNECTED')

log = logging.getLogger(__name__)

DISCONNECTED = 'disconnected'


class CayleyBall(namedtuple('CayleyBall', ['center', 'radius', 'layers',
                                           'distances'])):
    """Exact ball in the Cayley graph.

    .. attribute:: center

        The :class:`~freebycyclic.normal_form.NormalForm` at the center.

    .. attribute:: radius

        The radius.

    .. attribute:: layers

        Tuple of spheres; ``layers[d]`` holds the elements at distance
        ``d``, sorted by normal form.

    .. attribute:: distances

        Dictionary of element to distance.
    """

    __slots__ = ()

    @property
    def size(self):
        """Number of elements."""
        return len(self.distances)

    def contains(self, element):
        """``True`` when ``element`` lies in the ball."""
        return element in self.distances

    def sphere(self, distance):
        """Elements at exactly ``distance``."""
        return self.layers[distance]

    def elements(self):
        """Every element in order of distance, then normal form."""
        return [element for layer in self.layers for element in layer]


class DivergenceSample(namedtuple('DivergenceSample', [
        'radius', 'chi', 'witness', 'path', 'horizon', 'region_size'])):
    """One value of the divergence statistic.

    .. attribute:: radius

        The radius ``r``.

    .. attribute:: chi

        The longest avoiding distance, or ``'disconnected'``.

    .. attribute:: witness

        The pair ``(y, z)`` attaining it, or an unreachable pair.

    .. attribute:: path

        Elements of an avoiding shortest path from ``y`` to ``z``.

    .. attribute:: horizon

        Multiple of ``r`` bounding the searched region.

    .. attribute:: region_size

        Number of elements searched.
    """

    __slots__ = ()

    @property
    def is_disconnected(self):
        """``True`` when some pair could not be joined."""
        return self.chi == DISCONNECTED


def explore(torus, radius, center=normal_form.IDENTITY, budget=None):
    """Breadth-first ball in a :class:`~freebycyclic.normal_form.MappingTorus`.

    :raises freebycyclic.exceptions.BudgetExceeded:
        As soon as more than ``budget`` elements are found.
    """
    if radius < 0:
        raise exceptions.InputError('A ball needs a radius of at least 0')
    if budget is None:
        budget = misc.Budgets.from_environ().ball_budget
    letters = torus.generators()
    distances = {center: 0}
    layers = [(center,)]
    for distance in range(1, radius + 1):
        found = set()
        for element in layers[-1]:
            for letter in letters:
                neighbour = torus.multiply(element, letter)
                if neighbour not in distances:
                    found.add(neighbour)
        if len(distances) + len(found) > budget:
            raise exceptions.BudgetExceeded(budget,
                                            len(distances) + len(found))
        layer = tuple(sorted(found))
        for element in layer:
            distances[element] = distance
        layers.append(layer)
        log.debug('ball radius %d holds %d elements', distance,
                  len(distances))
    return CayleyBall(center, radius, tuple(layers), distances)


def _torus(phi):
    return normal_form.MappingTorus(endomorphisms.certified(phi))


def ball(phi, radius, center=normal_form.IDENTITY, budget=None):
    """Return the ball of ``radius`` about ``center``.

    :param phi: The :class:`~freebycyclic.endomorphisms.Endomorphism`; it
        is certified first.
    :param int radius: Non-negative radius.
    :param center: (optional) Center, the identity by default.
    :param int budget: (optional) Most elements allowed; defaults to the
        environment budget.
    :rtype: CayleyBall
    :raises freebycyclic.exceptions.BudgetExceeded:
        If the ball is larger than the budget.
    """
    return explore(_torus(phi), radius, center, budget)


def _region_graph(torus, region):
    index = {element: position for position, element in enumerate(region)}
    rows = []
    columns = []
    for position, element in enumerate(region):
        for letter in torus.generators():
            target = index.get(torus.multiply(element, letter))
            if target is not None:
                rows.append(position)
                columns.append(target)
    matrix = sparse.csr_matrix(
        (numpy.ones(len(rows)), (rows, columns)),
        shape=(len(region), len(region)))
    return index, matrix


def _path(predecessors, region, source, target):
    steps = [target]
    while steps[-1] != source:
        steps.append(predecessors[steps[-1]])
    return tuple(region[position] for position in reversed(steps))


def _search(torus, big, radius):
    inner = radius // 2
    region = [element for layer in big.layers[inner:] for element in layer]
    index, matrix = _region_graph(torus, region)
    sphere = big.sphere(radius)
    sources = [index[element] for element in sphere]
    lengths, predecessors = csgraph.shortest_path(
        matrix, method='D', unweighted=True, indices=sources,
        return_predecessors=True)
    pairs = lengths[:, sources]
    above = numpy.triu(numpy.ones(pairs.shape, dtype=bool), k=1)
    cut = numpy.argwhere(above & numpy.isinf(pairs))
    if len(cut):
        row, column = cut[0]
        return None, (sphere[row], sphere[column]), len(region)
    masked = numpy.where(above, pairs, -1)
    row, column = numpy.unravel_index(numpy.argmax(masked), masked.shape)
    if masked[row, column] <= 0:
        return (0, None, ()), None, len(region)
    path = _path(predecessors[row], region, sources[row], sources[column])
    best = (int(masked[row, column]), (sphere[row], sphere[column]), path)
    return best, None, len(region)


def divergence_chi(phi, radius, horizon=misc.DEFAULT_HORIZON, budget=None):
    """Compute ``chi(radius)`` about the identity.

    Paths are searched in the ball of radius ``horizon * radius`` with the
    open ball of radius ``radius // 2`` removed. When some pair of sphere
    points cannot be joined, the horizon grows by one multiple of the
    radius for as long as the larger ball fits the budget.

    :param phi: The automorphism; it is certified first.
    :param int radius: At least 2.
    :param int horizon: Initial multiple of ``radius`` searched.
    :param int budget: (optional) Most elements a ball may hold.
    :rtype: DivergenceSample
    :raises freebycyclic.exceptions.BudgetExceeded:
        If the initial region does not fit the budget.
    """
    if radius < 2:
        raise exceptions.InputError('Divergence needs a radius of at least 2')
    if horizon < 1:
        raise exceptions.InputError('The horizon must be at least 1')
    torus = _torus(phi)
    big = explore(torus, horizon * radius, budget=budget)
    while True:
        best, unreachable, size = _search(torus, big, radius)
        if best is not None:
            chi, witness, path = best
            log.debug('chi(%d) = %d over %d elements', radius, chi, size)
            return DivergenceSample(radius, chi, witness, path, horizon, size)
        try:
            big = explore(torus, (horizon + 1) * radius, budget=budget)
        except exceptions.BudgetExceeded as error:
            log.info('divergence at r=%d stops at horizon %d: %s', radius,
                     horizon, error)
            return DivergenceSample(radius, DISCONNECTED, unreachable, (),
                                    horizon, size)
        horizon += 1
        log.debug('divergence at r=%d: horizon grown to %d', radius, horizon)


def verify_sample(phi, sample):
    """Re-check the witness path of a connected sample.

    The endpoints must lie on the sphere, every step must multiply by one
    generator, every element must avoid the open half-radius ball and the
    length must equal ``chi``.
    """
    if sample.is_disconnected or sample.witness is None:
        return sample.chi in (0, DISCONNECTED)
    torus = _torus(phi)
    near = explore(torus, sample.radius)
    y, z = sample.witness
    if (sample.path[0], sample.path[-1]) != (y, z):
        return False
    if any(near.distances.get(end) != sample.radius for end in (y, z)):
        return False
    steps = set(torus.evaluate(words.Word((letter,)))
                for letter in torus.generators())
    for first, second in zip(sample.path, sample.path[1:]):
        if torus.product(torus.inverse(first), second) not in steps:
            return False
    inner = sample.radius // 2
    if any(near.distances.get(element, inner) < inner
           for element in sample.path):
        return False
    return len(sample.path) - 1 == sample.chi
