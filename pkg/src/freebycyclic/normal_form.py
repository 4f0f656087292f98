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
"""Normal forms and arithmetic in a mapping torus ``F x| Z``.

Every element is written uniquely as ``w t^k`` with ``w`` a reduced word
of the free group and ``t`` the stable letter, where
``t s t^-1 = phi(s)`` for each generator ``s``.
"""
from collections import namedtuple
import logging

from . import endomorphisms
from . import exceptions
from . import grammar
from . import words

__all__ = ('NormalForm', 'MappingTorus', 'multiply', 'IDENTITY')

log = logging.getLogger(__name__)


class NormalForm(namedtuple('NormalForm', ['fiber', 't_exp'])):
    """Element ``fiber * t**t_exp`` of a mapping torus.

    Tuples order lexicographically by fiber letters, then exponent, which
    fixes every tie-break in searches.
    """

    __slots__ = ()

    def __new__(cls, fiber=words.IDENTITY, t_exp=0):
        """Create a new NormalForm."""
        return super(NormalForm, cls).__new__(cls, fiber, t_exp)

    def is_identity(self):
        """``True`` for the identity element."""
        return self.t_exp == 0 and self.fiber.is_trivial()

    def has_infinite_order(self):
        """Every non-trivial element has infinite order."""
        return not self.is_identity()

    def format(self, basis, stable=None):
        """Render as letters followed by ``t^k``, ``1`` for the identity."""
        if stable is None:
            stable = basis.stable_letter()
        parts = []
        if not self.fiber.is_trivial():
            parts.append(self.fiber.format(basis))
        if self.t_exp == 1:
            parts.append(stable)
        elif self.t_exp:
            parts.append('{0}^{1}'.format(stable, self.t_exp))
        return ' '.join(parts) or grammar.IDENTITY_TOKEN


IDENTITY = NormalForm()


class MappingTorus(object):
    """Arithmetic in the mapping torus of a free-group automorphism.

    Powers of the automorphism are computed on demand and cached per
    exponent; negative exponents need a certified inverse.

    .. attribute:: phi

        The :class:`~freebycyclic.endomorphisms.Endomorphism`.

    .. attribute:: rank

        Rank of the fiber; the stable letter is generator ``rank`` of
        :attr:`extended_basis`.
    """

    def __init__(self, phi):
        """Set up arithmetic for ``phi``."""
        self.phi = phi
        self.rank = phi.rank
        self.extended_basis = phi.basis.extended()
        self.stable = self.extended_basis.name(self.rank)
        self._powers = {0: tuple(phi.basis.gens())}

    def power_images(self, exponent):
        """Return the images of the generators under ``phi**exponent``."""
        if exponent in self._powers:
            return self._powers[exponent]
        if exponent < 0 and not self.phi.certification.is_automorphism:
            raise exceptions.UncertifiedAutomorphism(
                'Multiplying at a negative t-exponent')
        step = 1 if exponent > 0 else -1
        base = self.phi if step > 0 else self.phi.inverse
        previous = self.power_images(exponent - step)
        images = tuple(endomorphisms.apply(base, image) for image in previous)
        self._powers[exponent] = images
        return images

    def twist(self, word, exponent):
        """Return ``phi**exponent`` applied to ``word``."""
        if exponent == 0 or word.is_trivial():
            return word
        images = self.power_images(exponent)
        return words.reduce_product(
            images[index] if sign > 0 else images[index].inverse()
            for index, sign in word.letters)

    def generators(self):
        """Inverse-closed generating letters over the extended basis.

        Order: fiber generators and their inverses, then ``t`` and
        ``t^-1``.
        """
        letters = []
        for index in range(self.rank + 1):
            letters.append((index, 1))
            letters.append((index, -1))
        return letters

    def multiply(self, element, letter):
        """Right-multiply by one letter of the extended basis.

        ``(w, k) * s = (w phi^k(s), k)`` and ``(w, k) * t = (w, k + 1)``.
        """
        index, sign = letter
        if index == self.rank:
            return NormalForm(element.fiber, element.t_exp + sign)
        image = self.power_images(element.t_exp)[index]
        if sign < 0:
            image = image.inverse()
        return NormalForm(element.fiber * image, element.t_exp)

    def product(self, left, right):
        """Return ``left * right``."""
        fiber = left.fiber * self.twist(right.fiber, left.t_exp)
        return NormalForm(fiber, left.t_exp + right.t_exp)

    def inverse(self, element):
        """Return the inverse, ``(phi^-k(w^-1), -k)``."""
        return NormalForm(self.twist(element.fiber.inverse(), -element.t_exp),
                          -element.t_exp)

    def power(self, element, exponent):
        """Return ``element ** exponent``."""
        base = element if exponent >= 0 else self.inverse(element)
        result = IDENTITY
        for _ in range(abs(exponent)):
            result = self.product(result, base)
        return result

    def conjugate(self, element, by):
        """Return ``by * element * by^-1``."""
        return self.product(self.product(by, element), self.inverse(by))

    def commute(self, left, right):
        """``True`` when the two elements commute."""
        return self.product(left, right) == self.product(right, left)

    def evaluate(self, word):
        """Evaluate a word over the extended basis."""
        element = IDENTITY
        for letter in word.letters:
            element = self.multiply(element, letter)
        return element

    def fiber_element(self, word):
        """Embed a fiber word."""
        return NormalForm(word, 0)

    def stable_element(self, exponent=1):
        """Return ``t**exponent``."""
        return NormalForm(words.IDENTITY, exponent)

    def format(self, element):
        """Render an element with basis names and the stable letter."""
        return element.format(self.phi.basis, self.stable)

    def parse(self, text):
        """Read an element written over the extended basis."""
        return self.evaluate(words.parse_word(text, self.extended_basis))


def multiply(element, letter, phi):
    """Right-multiply ``element`` by one letter in the torus of ``phi``.

    :param element: The :class:`NormalForm`.
    :param letter: ``(index, sign)`` over the basis extended by ``t``,
        whose index is the rank.
    :param phi: The automorphism; negative exponents need it certified.
    :rtype: NormalForm
    :raises freebycyclic.exceptions.UncertifiedAutomorphism:
        If a negative power of an uncertified map is needed.
    """
    return MappingTorus(phi).multiply(element, letter)
