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
"""Module containing endomorphisms of a free group and their certification."""
from collections import namedtuple
import logging

from . import exceptions
from . import folding
from . import words

__all__ = ('Certification', 'Endomorphism', 'identity', 'apply', 'compose',
           'power', 'certify_automorphism', 'certified')

log = logging.getLogger(__name__)


class Certification(namedtuple('Certification',
                               ['status', 'inverse', 'missing'])):
    """Outcome of an automorphism check.

    .. attribute:: status

        One of :attr:`UNKNOWN`, :attr:`YES` or :attr:`NO`.

    .. attribute:: inverse

        The verified inverse :class:`Endomorphism` when the status is
        :attr:`YES`.

    .. attribute:: missing

        Name of a generator outside the image subgroup when the status is
        :attr:`NO`.
    """

    UNKNOWN = 'unknown'
    YES = 'yes'
    NO = 'no'

    __slots__ = ()

    def __new__(cls, status=UNKNOWN, inverse=None, missing=None):
        """Create a new Certification."""
        return super(Certification, cls).__new__(cls, status, inverse, missing)

    @property
    def is_automorphism(self):
        """``True`` when an inverse has been verified."""
        return self.status == self.YES


NOT_CERTIFIED = Certification()


class Endomorphism(namedtuple('Endomorphism',
                              ['basis', 'images', 'certification'])):
    """Immutable map sending each basis generator to a reduced word.

    .. attribute:: basis

        The :class:`~freebycyclic.words.FreeBasis` of domain and codomain.

    .. attribute:: images

        Tuple of :class:`~freebycyclic.words.Word`, one per generator in
        basis order.

    .. attribute:: certification

        A :class:`Certification`.
    """

    __slots__ = ()

    def __new__(cls, basis, images, certification=NOT_CERTIFIED):
        """Create a new Endomorphism."""
        images = tuple(images)
        if len(images) != basis.rank:
            raise exceptions.InputError(
                '{0} images given for a basis of rank {1}'.format(
                    len(images), basis.rank))
        for image in images:
            for index, _ in image.letters:
                if not 0 <= index < basis.rank:
                    raise exceptions.UnknownGenerator(index)
        return super(Endomorphism, cls).__new__(
            cls, basis, images, certification)

    @classmethod
    def from_mapping(cls, basis, mapping):
        """Build an endomorphism from ``{name: word or text}``.

        :raises freebycyclic.exceptions.InputError:
            If a generator has no image or an image names an unknown
            generator.
        """
        images = []
        for name in basis.generators:
            if name not in mapping:
                raise exceptions.InputError(
                    'No image given for generator {0!r}'.format(name))
            image = mapping[name]
            if isinstance(image, str):
                image = words.parse_word(image, basis)
            images.append(image)
        unknown = set(mapping) - set(basis.generators)
        if unknown:
            raise exceptions.UnknownGenerator(sorted(unknown)[0])
        return cls(basis, images)

    @property
    def rank(self):
        """Rank of the basis."""
        return self.basis.rank

    @property
    def inverse(self):
        """The certified inverse, or ``None``."""
        return self.certification.inverse

    def image(self, name):
        """Return the image of the generator called ``name``."""
        return self.images[self.basis.index(name)]

    def is_identity(self):
        """Return ``True`` when every generator is fixed."""
        return all(image == generator
                   for image, generator in zip(self.images, self.basis.gens()))

    def with_certification(self, certification):
        """Return a copy carrying ``certification``."""
        return self._replace(certification=certification)

    def __call__(self, word):
        """Shorthand for :func:`apply`."""
        return apply(self, word)

    def format_images(self):
        """Return ``[(name, rendered image)]`` in basis order."""
        return [(name, image.format(self.basis))
                for name, image in zip(self.basis.generators, self.images)]


def identity(basis):
    """Return the identity automorphism, certified as its own inverse."""
    plain = Endomorphism(basis, basis.gens())
    return plain.with_certification(Certification(Certification.YES, plain))


def apply(phi, word, word_cap=None):
    """Apply ``phi`` to ``word`` and reduce.

    :param phi: The :class:`Endomorphism`.
    :param word: A :class:`~freebycyclic.words.Word` over ``phi.basis``.
    :param int word_cap: (optional) Longest reduced image allowed.
    :rtype: Word
    :raises freebycyclic.exceptions.UnknownGenerator:
        If the word uses a generator outside the basis.
    :raises freebycyclic.exceptions.WordLengthExceeded:
        If the image grows past ``word_cap``.
    """
    factors = []
    for index, sign in word.letters:
        if not 0 <= index < phi.rank:
            raise exceptions.UnknownGenerator(index)
        image = phi.images[index]
        factors.append(image if sign > 0 else image.inverse())
    return words.reduce_product(factors, word_cap=word_cap)


def _same_basis(phi, psi):
    if phi.basis != psi.basis:
        raise exceptions.BasisMismatch(phi.basis.generators,
                                       psi.basis.generators)


def compose(phi, psi):
    """Return ``phi`` after ``psi``, sending ``s`` to ``phi(psi(s))``.

    When both maps are certified the composite is certified with the
    composite of the inverses.

    :raises freebycyclic.exceptions.BasisMismatch:
        If the maps are defined over different bases.
    """
    _same_basis(phi, psi)
    images = [apply(phi, image) for image in psi.images]
    composite = Endomorphism(phi.basis, images)
    if phi.certification.is_automorphism and psi.certification.is_automorphism:
        inverse = Endomorphism(
            phi.basis,
            [apply(psi.inverse, image) for image in phi.inverse.images])
        composite = composite.with_certification(
            Certification(Certification.YES, inverse))
    return composite


def power(phi, exponent):
    """Return ``phi`` composed with itself ``exponent`` times.

    :param int exponent: Any integer; negative powers use the certified
        inverse.
    :raises freebycyclic.exceptions.UncertifiedAutomorphism:
        If ``exponent`` is negative and ``phi`` has no certified inverse.
    """
    if exponent < 0:
        if not phi.certification.is_automorphism:
            raise exceptions.UncertifiedAutomorphism('A negative power')
        base = phi.inverse.with_certification(
            Certification(Certification.YES,
                          phi.with_certification(NOT_CERTIFIED)))
        exponent = -exponent
    else:
        base = phi
    result = identity(phi.basis)
    if not phi.certification.is_automorphism:
        result = result.with_certification(NOT_CERTIFIED)
    while exponent:
        if exponent & 1:
            result = compose(result, base)
        base = compose(base, base)
        exponent >>= 1
    return result


def certify_automorphism(phi):
    """Decide whether ``phi`` is an automorphism and find its inverse.

    Free groups of finite rank are Hopfian, so ``phi`` is an automorphism
    exactly when every generator lies in the image subgroup. Each generator
    is then expressed in the images, which spells its preimage.

    :returns: A :class:`Certification` with status ``yes`` and the verified
        inverse, or status ``no`` and a missing generator.
    :rtype: Certification
    :raises freebycyclic.exceptions.ConsistencyError:
        If the computed inverse fails to compose to the identity.
    """
    graph = folding.fold(phi.images)
    preimages = []
    for name, generator in zip(phi.basis.generators, phi.basis.gens()):
        expression = graph.express(generator)
        if expression is None:
            log.info('generator %s is not in the image of the map', name)
            return Certification(Certification.NO, missing=name)
        preimages.append(expression)
    inverse = Endomorphism(phi.basis, preimages)
    for name, generator in zip(phi.basis.generators, phi.basis.gens()):
        if apply(phi, apply(inverse, generator)) != generator:
            raise exceptions.ConsistencyError(
                'the computed inverse does not return {0}'.format(name))
    log.debug('certified automorphism of rank %d after %d folds',
              phi.rank, graph.fold_count)
    return Certification(Certification.YES, inverse)


def certified(phi):
    """Return ``phi`` carrying a verified inverse.

    :raises freebycyclic.exceptions.NotAnAutomorphism:
        If some generator is missing from the image subgroup.
    """
    if phi.certification.is_automorphism:
        return phi
    certification = certify_automorphism(phi)
    if not certification.is_automorphism:
        raise exceptions.NotAnAutomorphism(certification.missing)
    return phi.with_certification(certification)


def check_declared_inverse(phi, declared):
    """Compare a declared inverse against the certified one.

    :raises freebycyclic.exceptions.VerificationError:
        If ``declared`` does not invert ``phi``.
    """
    _same_basis(phi, declared)
    for name, generator in zip(phi.basis.generators, phi.basis.gens()):
        if apply(phi, apply(declared, generator)) != generator:
            raise exceptions.VerificationError(
                'The declared inverse does not undo the map on {0}.'.format(
                    name))
    return True
