# -*- coding: utf-8 -*-
"""Presentations of mapping tori."""
from collections import namedtuple

from . import exceptions
from . import words

__all__ = ('GroupPresentation', 'mapping_torus_presentation')


class GroupPresentation(namedtuple('GroupPresentation',
                                   ['generators', 'relators'])):
    """Finite presentation over the fiber basis extended by ``t``.

    .. attribute:: generators

        :class:`~freebycyclic.words.FreeBasis` whose last name is the
        stable letter.

    .. attribute:: relators

        Tuple of reduced words ``t s t^-1 phi(s)^-1``, one per fiber
        generator.
    """

    __slots__ = ()

    @property
    def stable_letter(self):
        """Name of the stable letter."""
        return self.generators.generators[-1]

    def relations(self):
        """Render each relator as ``t s t^-1 = phi(s)``."""
        stable = self.generators.rank - 1
        rendered = []
        for relator in self.relators:
            # t s t^-1 phi(s)^-1: the image is what follows t^-1.
            split = relator.letters.index((stable, -1)) + 1
            left = words.Word(relator.letters[:split])
            right = words.Word(relator.letters[split:]).inverse()
            rendered.append('{0} = {1}'.format(
                left.format(self.generators), right.format(self.generators)))
        return rendered

    def format(self):
        """Render as ``<gens | relations>``."""
        return '<{0} | {1}>'.format(', '.join(self.generators.generators),
                                    ', '.join(self.relations()))


def mapping_torus_presentation(phi):
    """Return the presentation ``<S, t | t s t^-1 = phi(s)>``.

    :param phi: A certified
        :class:`~freebycyclic.endomorphisms.Endomorphism`.
    :rtype: GroupPresentation
    :raises freebycyclic.exceptions.UncertifiedAutomorphism:
        If ``phi`` has not been certified.
    """
    if not phi.certification.is_automorphism:
        raise exceptions.UncertifiedAutomorphism(
            'A mapping torus presentation')
    extended = phi.basis.extended()
    stable = phi.rank
    relators = []
    for index, image in enumerate(phi.images):
        raw = [(stable, 1), (index, 1), (stable, -1)]
        raw.extend(image.inverse().letters)
        relators.append(words.free_reduce(raw))
    return GroupPresentation(extended, tuple(relators))
