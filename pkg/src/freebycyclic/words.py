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
"""Module containing free bases, reduced words and free reduction."""
from collections import namedtuple

from . import exceptions
from . import grammar
from . import misc

__all__ = ('FreeBasis', 'Word', 'free_reduce', 'reduce_product',
           'parse_word', 'IDENTITY')


class FreeBasis(namedtuple('FreeBasis', ['generators'])):
    """Immutable ordered list of distinct generator names.

    .. attribute:: generators

        Tuple of generator names. Inverses are never named; a word records
        them through the sign of each letter.
    """

    __slots__ = ()

    def __new__(cls, generators):
        """Create a new FreeBasis, checking that the names are usable."""
        generators = tuple(generators)
        if not generators:
            raise exceptions.InvalidBasis(generators, 'rank must be >= 1')
        for name in generators:
            if not isinstance(name, str) or not misc.NAME_MATCHER.match(name):
                raise exceptions.InvalidBasis(
                    generators, '{0!r} is not a generator name'.format(name))
        if len(set(generators)) != len(generators):
            raise exceptions.InvalidBasis(generators, 'names repeat')
        return super(FreeBasis, cls).__new__(cls, generators)

    @property
    def rank(self):
        """Number of generators."""
        return len(self.generators)

    def index(self, name):
        """Return the position of ``name`` in the basis.

        :raises freebycyclic.exceptions.UnknownGenerator:
            If the name is not a generator.
        """
        try:
            return self.generators.index(name)
        except ValueError:
            raise exceptions.UnknownGenerator(name)

    def name(self, index):
        """Return the name of the generator at ``index``."""
        return self.generators[index]

    def word(self, name):
        """Return the one-letter word for the generator ``name``."""
        return Word(((self.index(name), 1),))

    def gens(self):
        """Return the one-letter words of every generator, in order."""
        return [Word(((i, 1),)) for i in range(self.rank)]

    def stable_letter(self, preferred=misc.STABLE_LETTER):
        """Return a name for the stable letter that no generator uses."""
        name = preferred
        while name in self.generators:
            name += '_'
        return name

    def extended(self, preferred=misc.STABLE_LETTER):
        """Return this basis with a stable letter appended."""
        return FreeBasis(self.generators + (self.stable_letter(preferred),))


class Word(namedtuple('Word', ['letters'])):
    """Immutable freely reduced word.

    .. note::

        Build words with :func:`free_reduce` or :func:`parse_word`. The
        constructor trusts that ``letters`` is already reduced.

    .. attribute:: letters

        Tuple of ``(generator index, sign)`` pairs with sign ``+1`` or
        ``-1``.
    """

    __slots__ = ()

    def __new__(cls, letters=()):
        """Create a new Word from reduced letters."""
        return super(Word, cls).__new__(cls, tuple(letters))

    @property
    def length(self):
        """Number of letters, the word length ``||w||``."""
        return len(self.letters)

    def is_trivial(self):
        """Return ``True`` for the empty word."""
        return not self.letters

    def inverse(self):
        """Return the inverse word."""
        return Word((index, -sign) for index, sign in reversed(self.letters))

    def __mul__(self, other):
        """Concatenate and reduce."""
        return free_reduce(self.letters + other.letters)

    def __pow__(self, exponent):
        """Raise the word to an integer power."""
        base = self if exponent >= 0 else self.inverse()
        result = []
        for _ in range(abs(exponent)):
            for index, sign in base.letters:
                _push(result, index, sign)
        return Word(result)

    def cyclically_reduced(self):
        """Return the cyclic reduction of this word."""
        return free_reduce(self.letters, cyclic=True)

    def generators_used(self):
        """Return the set of generator indices occurring in the word."""
        return set(index for index, _ in self.letters)

    def format(self, basis):
        """Render the word with the generator names of ``basis``.

        The identity renders as ``1`` and inverse letters as ``name^-1``.
        """
        if not self.letters:
            return grammar.IDENTITY_TOKEN
        return ' '.join(_format_letter(basis, index, sign)
                        for index, sign in self.letters)


IDENTITY = Word()


def _format_letter(basis, index, sign):
    name = basis.name(index)
    if sign < 0:
        return name + '^-1'
    return name


def _push(reduced, index, sign):
    # Cancel at the append boundary so the list stays reduced.
    if reduced and reduced[-1] == (index, -sign):
        reduced.pop()
    else:
        reduced.append((index, sign))


def _resolve(letter, basis):
    generator, sign = letter
    if sign not in (1, -1):
        raise exceptions.InputError(
            'Letter {0!r} has a sign other than +1 or -1'.format(letter))
    if isinstance(generator, str):
        if basis is None:
            raise exceptions.UnknownGenerator(generator)
        return basis.index(generator), sign
    if basis is not None and not 0 <= generator < basis.rank:
        raise exceptions.UnknownGenerator(generator)
    return generator, sign


def free_reduce(letters, cyclic=False, basis=None):
    """Freely reduce a sequence of letters.

    Letters are ``(generator, sign)`` pairs where the generator is an index
    or, when ``basis`` is given, a name.

    :param letters: Raw letters, not necessarily reduced.
    :param bool cyclic: Also remove cancelling pairs around the ends.
    :param basis: (optional) :class:`FreeBasis` used to resolve names and
        check indices.
    :returns: The unique reduced word equal to the input.
    :rtype: Word
    :raises freebycyclic.exceptions.UnknownGenerator:
        If a letter names a generator outside the basis.
    """
    reduced = []
    for letter in letters:
        index, sign = _resolve(letter, basis)
        _push(reduced, index, sign)
    if cyclic:
        start, end = 0, len(reduced)
        while (end - start >= 2 and
               reduced[start] == (reduced[end - 1][0], -reduced[end - 1][1])):
            start += 1
            end -= 1
        reduced = reduced[start:end]
    return Word(reduced)


def reduce_product(factors, word_cap=None):
    """Multiply words left to right, reducing as each factor is appended.

    :param factors: Iterable of :class:`Word`.
    :param int word_cap: (optional) Longest reduced length allowed after
        any factor.
    :rtype: Word
    :raises freebycyclic.exceptions.WordLengthExceeded:
        If the running product grows past ``word_cap``.
    """
    reduced = []
    for factor in factors:
        for index, sign in factor.letters:
            _push(reduced, index, sign)
        if word_cap is not None and len(reduced) > word_cap:
            raise exceptions.WordLengthExceeded(word_cap, len(reduced))
    return Word(reduced)


def parse_word(text, basis):
    """Parse whitespace separated letters such as ``e3 e0 e1 e2^-1``.

    A letter may carry any integer power (``a^3``, ``b^-2``). The token
    ``1`` and the empty string denote the identity.

    :param str text: Letters to parse.
    :param basis: :class:`FreeBasis` naming the generators.
    :returns: The reduced word.
    :rtype: Word
    :raises freebycyclic.exceptions.InputError:
        If a token is not a letter, or names an unknown generator.
    """
    raw = []
    for token in text.split():
        if token == grammar.IDENTITY_TOKEN:
            continue
        match = misc.LETTER_MATCHER.match(token)
        if match is None:
            raise exceptions.InputError(
                '{0!r} is not a letter'.format(token))
        index = basis.index(match.group('name'))
        power = int(match.group('power') or 1)
        sign = 1 if power > 0 else -1
        raw.extend([(index, sign)] * abs(power))
    return free_reduce(raw)


def unreduced_length(text):
    """Return the number of letters written in ``text`` before reduction."""
    count = 0
    for token in text.split():
        match = misc.LETTER_MATCHER.match(token)
        if match is not None:
            count += abs(int(match.group('power') or 1))
    return count
