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
"""Module containing the spec-file parser and the SpecBuilder object.

A spec file names a basis and the image of every generator. Without
``edge:`` lines the generators are the loops of a rose; with them they are
the edges of a graph and the images are edge paths.
"""
from collections import namedtuple
import logging
import warnings

from . import endomorphisms
from . import exceptions
from . import grammar
from . import graphs
from . import misc
from . import validators
from . import words

__all__ = ('SpecBuilder', 'SpecFile', 'parse_spec')

log = logging.getLogger(__name__)


class SpecFile(namedtuple('SpecFile', ['basis', 'images', 'edges', 'order',
                                       'inverse', 'power', 'text'])):
    """Parsed spec file.

    .. attribute:: basis

        :class:`~freebycyclic.words.FreeBasis` of the declared generators.

    .. attribute:: images

        Tuple of reduced :class:`~freebycyclic.words.Word`, one per
        generator.

    .. attribute:: edges

        Tuple of :class:`~freebycyclic.graphs.Edge`, or ``None`` for a rose.

    .. attribute:: order

        Filtration order as generator indices, lowest first.

    .. attribute:: inverse

        Tuple of declared inverse images, or ``None``.

    .. attribute:: power

        The map represents ``phi**power``.

    .. attribute:: text

        The source text.
    """

    __slots__ = ()

    @property
    def has_graph(self):
        """``True`` when ``edge:`` lines were given."""
        return self.edges is not None

    def graph(self):
        """Return the :class:`~freebycyclic.graphs.MarkedGraph`."""
        if not self.has_graph:
            return graphs.rose_for(self.basis)
        vertices = []
        for edge in self.edges:
            for vertex in (edge.origin, edge.terminus):
                if vertex not in vertices:
                    vertices.append(vertex)
        return graphs.MarkedGraph(vertices, self.edges)

    def candidate(self):
        """Return the unverified graph map as a candidate."""
        return validators.Candidate(
            self.graph(), self.order,
            [graphs.EdgePath.from_word(image) for image in self.images])

    def endomorphism(self):
        """Return the automorphism the spec describes.

        For a graph it is read through the spanning-tree marking chosen in
        filtration order.
        """
        if not self.has_graph:
            return endomorphisms.Endomorphism(self.basis, self.images)
        graph = self.graph()
        marking = graph.marking(self.order)
        images = []
        for edge in marking.generators:
            factors = []
            for index, direction in marking.loop(graph, edge).steps:
                image = self.images[index]
                factors.append(image if direction > 0 else image.inverse())
            images.append(marking.read(
                graphs.EdgePath(words.reduce_product(factors).letters)))
        return endomorphisms.Endomorphism(marking.basis, images)

    def declared_inverse(self):
        """Return the declared inverse, or ``None``."""
        if self.inverse is None:
            return None
        return endomorphisms.Endomorphism(self.basis, self.inverse)


class SpecBuilder(object):
    """Object to assemble a :class:`SpecFile` one declaration at a time.

    Every ``add_*`` method returns a new builder, so partial builders can be
    shared.

    .. code-block:: python

        >>> spec = (SpecBuilder().add_basis(['a', 'b'])
        ...         .add_image('a', 'a').add_image('b', 'b a').finalize())
    """

    def __init__(self, basis=None, images=None, edges=None, order=None,
                 inverse=None, power=1, text=''):
        """Initialize our builder."""
        self.basis = basis
        self.images = images or {}
        self.edges = edges
        self.order = order
        self.inverse = inverse
        self.power = power
        self.text = text

    def __repr__(self):
        """Provide a convenient view of our builder object."""
        formatstr = ('SpecBuilder(basis={b.basis}, images={n}, edges={b.edges}'
                     ', order={b.order}, power={b.power})')
        return formatstr.format(b=self, n=len(self.images))

    def _replace(self, **changes):
        values = dict(basis=self.basis, images=dict(self.images),
                      edges=self.edges, order=self.order,
                      inverse=None if self.inverse is None
                      else dict(self.inverse),
                      power=self.power, text=self.text)
        values.update(changes)
        return SpecBuilder(**values)

    def _require_basis(self, what):
        if self.basis is None:
            raise exceptions.InputError(
                'Declare the basis before {0}'.format(what))
        return self.basis

    def add_basis(self, names):
        """Declare the generators."""
        if self.basis is not None:
            raise exceptions.InputError('The basis is declared twice')
        return self._replace(basis=words.FreeBasis(names))

    def _parse_image(self, name, image):
        basis = self._require_basis('images')
        basis.index(name)
        if isinstance(image, words.Word):
            return image
        word = words.parse_word(image, basis)
        if word.length != words.unreduced_length(image):
            warnings.warn(
                'The image of {0} was reduced from {1!r} to {2!r}.'.format(
                    name, image.strip(), word.format(basis)),
                exceptions.ImageReducedWarning)
        return word

    def add_image(self, name, image):
        """Declare the image of one generator.

        :param str name: The generator.
        :param image: Letters as text or a :class:`~freebycyclic.words.Word`.
        """
        word = self._parse_image(name, image)
        if name in self.images:
            raise exceptions.InputError(
                'The image of {0} is declared twice'.format(name))
        images = dict(self.images)
        images[name] = word
        return self._replace(images=images)

    def add_inverse(self, name, image):
        """Declare the image of one generator under the inverse."""
        word = self._parse_image(name, image)
        inverse = dict(self.inverse or {})
        if name in inverse:
            raise exceptions.InputError(
                'The inverse image of {0} is declared twice'.format(name))
        inverse[name] = word
        return self._replace(inverse=inverse)

    def add_edge(self, name, origin, terminus):
        """Place a generator as an edge from ``origin`` to ``terminus``."""
        self._require_basis('edges').index(name)
        edges = dict(self.edges or {})
        if name in edges:
            raise exceptions.InputError(
                'Edge {0} is declared twice'.format(name))
        edges[name] = (origin, terminus)
        return self._replace(edges=edges)

    def add_order(self, names):
        """Declare the filtration order, lowest edge first."""
        basis = self._require_basis('the order')
        if self.order is not None:
            raise exceptions.InputError('The order is declared twice')
        return self._replace(order=[basis.index(name) for name in names])

    def add_power(self, power):
        """Record that the map represents a power of the automorphism."""
        power = int(power)
        if power < 1:
            raise exceptions.InputError('The power must be at least 1')
        return self._replace(power=power)

    def add_text(self, text):
        """Keep the source text for provenance."""
        return self._replace(text=text)

    def finalize(self):
        """Return the :class:`SpecFile`.

        :raises freebycyclic.exceptions.InputError:
            If a generator has no image, no edge or no inverse image when
            others have one.
        """
        basis = self._require_basis('finishing')
        for name in basis.generators:
            if name not in self.images:
                raise exceptions.SpecParseError(
                    None, '', 'no image is given for {0}'.format(name))
        edges = None
        if self.edges is not None:
            missing = [name for name in basis.generators
                       if name not in self.edges]
            if missing:
                raise exceptions.SpecParseError(
                    None, '', 'no edge is given for {0}'.format(missing[0]))
            edges = tuple(graphs.Edge(name, *self.edges[name])
                          for name in basis.generators)
        inverse = None
        if self.inverse is not None:
            missing = [name for name in basis.generators
                       if name not in self.inverse]
            if missing:
                raise exceptions.SpecParseError(
                    None, '', 'no inverse image is given for {0}'.format(
                        missing[0]))
            inverse = tuple(self.inverse[name] for name in basis.generators)
        order = self.order
        if order is None:
            order = range(basis.rank)
        return SpecFile(basis,
                        tuple(self.images[name] for name in basis.generators),
                        edges, tuple(order), inverse, self.power, self.text)


def _strip(line):
    return line.split(grammar.COMMENT_MARKER, 1)[0].strip()


def _dispatch(builder, line):
    match = misc.BASIS_LINE_MATCHER.match(line)
    if match:
        return builder.add_basis(match.group('names').split())
    match = misc.MAP_LINE_MATCHER.match(line)
    if match:
        return builder.add_image(match.group('gen'), match.group('image'))
    match = misc.INVERSE_LINE_MATCHER.match(line)
    if match:
        return builder.add_inverse(match.group('gen'), match.group('image'))
    match = misc.EDGE_LINE_MATCHER.match(line)
    if match:
        return builder.add_edge(match.group('gen'), match.group('origin'),
                                match.group('terminus'))
    match = misc.ORDER_LINE_MATCHER.match(line)
    if match:
        return builder.add_order(match.group('names').split())
    match = misc.POWER_LINE_MATCHER.match(line)
    if match:
        return builder.add_power(match.group('power'))
    raise exceptions.InputError('unrecognised declaration')


def parse_spec(text):
    """Parse the text of a spec file.

    :param str text: The file contents.
    :rtype: SpecFile
    :raises freebycyclic.exceptions.SpecParseError:
        Naming the line that could not be used, or the generator whose
        image is missing.
    """
    builder = SpecBuilder().add_text(text)
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        try:
            builder = _dispatch(builder, line)
        except exceptions.SpecParseError:
            raise
        except exceptions.InputError as error:
            raise exceptions.SpecParseError(number, raw, str(error))
    spec = builder.finalize()
    log.debug('parsed spec of rank %d (%s)', spec.basis.rank,
              'graph' if spec.has_graph else 'rose')
    return spec
