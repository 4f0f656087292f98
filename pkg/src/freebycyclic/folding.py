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
"""Stallings folding of finitely generated subgroups of a free group.

Every edge of the folded graph carries, besides its letter, a label: a word
in the subgroup generators. Reading a closed path at the basepoint and
multiplying the labels expresses the element read in terms of the
generators that were folded.
"""
import logging

from . import words

__all__ = ('SubgroupGraph', 'fold', 'stallings_membership', 'express')

log = logging.getLogger(__name__)

BASEPOINT = 0


def _inverse_letter(letter):
    return (letter[0], -letter[1])


def _shift(source, target, label, vertex, potential):
    # Conjugating at a non-base vertex leaves closed-path labels unchanged.
    if source == vertex:
        label = potential.inverse() * label
    if target == vertex:
        label = label * potential
    return label


class SubgroupGraph(object):
    """Folded graph of a subgroup given by generating words.

    .. attribute:: generators

        The generating words, in the order their labels refer to.

    .. attribute:: vertex_count

        Number of vertices after folding.
    """

    def __init__(self, generators):
        """Fold the wedge of loops spelling ``generators``."""
        self.generators = tuple(generators)
        self._out = {BASEPOINT: {}}
        self._parent = {}
        self._next_vertex = 1
        self.fold_count = 0
        for position, generator in enumerate(self.generators):
            if generator.is_trivial():
                continue
            self._add_loop(position, generator)
        log.debug('folded %d generators into %d vertices after %d folds',
                  len(self.generators), self.vertex_count, self.fold_count)

    @property
    def vertex_count(self):
        """Number of live vertices."""
        return len(self._out)

    @property
    def edge_count(self):
        """Number of undirected edges."""
        return sum(len(letters) for letters in self._out.values()) // 2

    def rank(self):
        """Rank of the subgroup, the first Betti number of the core."""
        return self.edge_count - self.vertex_count + 1

    def _find(self, vertex):
        while vertex in self._parent:
            vertex = self._parent[vertex]
        return vertex

    def _new_vertex(self):
        vertex = self._next_vertex
        self._next_vertex += 1
        self._out[vertex] = {}
        return vertex

    def _add_loop(self, position, generator):
        # Every edge of the loop is pending before the first fold.
        letters = generator.letters
        vertices = ([BASEPOINT] +
                    [self._new_vertex() for _ in letters[1:]] + [BASEPOINT])
        label = words.Word(((position, 1),))
        edges = []
        for step, letter in enumerate(letters):
            edges.append((vertices[step], letter, vertices[step + 1], label))
            label = words.IDENTITY
        self._add_edges(edges)

    def _set(self, source, letter, target, label):
        self._out[source][letter] = (target, label)
        self._out[target][_inverse_letter(letter)] = (source, label.inverse())

    def _detach(self, vertex):
        edges = []
        for letter, (target, label) in sorted(self._out[vertex].items()):
            if target == vertex and letter[1] < 0:
                continue
            edges.append((vertex, letter, target, label))
        for _, letter, target, _ in edges:
            self._out[vertex].pop(letter, None)
            self._out[target].pop(_inverse_letter(letter), None)
        del self._out[vertex]
        return edges

    def _add_edges(self, edges):
        pending = list(edges)
        while pending:
            source, letter, target, label = pending.pop()
            source, target = self._find(source), self._find(target)
            existing = self._out[source].get(letter)
            if existing is None:
                reverse = self._out[target].get(_inverse_letter(letter))
                if reverse is None:
                    self._set(source, letter, target, label)
                else:
                    pending.append((target, _inverse_letter(letter), source,
                                    label.inverse()))
                continue
            other, other_label = existing
            if other == target:
                continue
            self.fold_count += 1
            # Keep the basepoint; drop the other endpoint.
            if target != BASEPOINT:
                drop, keep = target, other
                potential = label.inverse() * other_label
            else:
                drop, keep = other, target
                potential = other_label.inverse() * label
            pending.append((source, letter, target, label))
            pending.extend(self._detach(drop))
            # Edges still waiting may touch the dropped vertex as well.
            pending = [
                (edge_source, edge_letter, edge_target,
                 _shift(edge_source, edge_target, edge_label, drop,
                        potential))
                for edge_source, edge_letter, edge_target, edge_label in (
                    (self._find(s), step, self._find(t), lab)
                    for s, step, t, lab in pending)
            ]
            self._parent[drop] = keep

    def _trace(self, word):
        vertex = BASEPOINT
        labels = []
        for letter in word.letters:
            step = self._out[vertex].get(letter)
            if step is None:
                return None, None
            vertex, label = step
            labels.append(label)
        return vertex, labels

    def contains(self, word):
        """Return ``True`` when ``word`` lies in the subgroup."""
        end, _ = self._trace(word)
        return end == BASEPOINT

    def express(self, word):
        """Write ``word`` as a word in the subgroup generators.

        :returns: A word whose generator indices are positions in
            :attr:`generators`, or ``None`` when ``word`` is not a member.
        :rtype: Word
        """
        end, labels = self._trace(word)
        if end != BASEPOINT:
            return None
        return words.reduce_product(labels)

    def evaluate(self, expression):
        """Substitute the generators into a word over their positions."""
        factors = []
        for position, sign in expression.letters:
            generator = self.generators[position]
            factors.append(generator if sign > 0 else generator.inverse())
        return words.reduce_product(factors)


def fold(generators):
    """Fold the wedge of loops spelling ``generators``.

    :param generators: Iterable of :class:`~freebycyclic.words.Word`.
    :rtype: SubgroupGraph
    """
    return SubgroupGraph(generators)


def stallings_membership(subgroup_gens, word):
    """Decide whether ``word`` lies in the subgroup generated.

    :param list subgroup_gens: Generating words, all over one basis.
    :param word: The word to test.
    :returns: ``True`` if ``word`` is a member.
    :rtype: bool
    """
    return fold(subgroup_gens).contains(word)


def express(subgroup_gens, word):
    """Express ``word`` in the generators, or return ``None``."""
    return fold(subgroup_gens).express(word)
