# -*- coding: utf-8 -*-
"""Transition matrices of graph maps and their spectral radius."""
from collections import namedtuple
import logging

import numpy

from . import endomorphisms
from . import misc
from . import representatives
from . import validators

__all__ = ('TransitionReport', 'transition_matrix', 'transition_analysis')

log = logging.getLogger(__name__)


class TransitionReport(namedtuple('TransitionReport', [
        'labels', 'matrix', 'spectral_radius', 'exponential',
        'unitriangular'])):
    """Transition matrix with its spectral verdict.

    .. attribute:: labels

        Row and column names, in filtration order when one is known.

    .. attribute:: matrix

        :class:`numpy.ndarray` of integers; entry ``[i][j]`` counts the
        occurrences of edge ``j`` in either direction in the image of edge
        ``i``.

    .. attribute:: spectral_radius

        Largest absolute eigenvalue.

    .. attribute:: exponential

        ``True`` when the spectral radius exceeds one by more than the
        tolerance.

    .. attribute:: unitriangular

        ``True`` when the matrix has ones on the diagonal and zeros above
        it; ``None`` when no filtration order is known.
    """

    __slots__ = ()


def _rows(subject):
    if isinstance(subject, representatives.FilteredRepresentative):
        labels = [subject.edge_name(index) for index in subject.order]
        images = [subject.edge_image(index).steps for index in subject.order]
        return labels, list(subject.order), images, True
    if isinstance(subject, validators.Candidate):
        labels = list(subject.graph.edge_names)
        columns = list(range(len(labels)))
        images = [image.steps for image in subject.images]
        return labels, columns, images, False
    if isinstance(subject, endomorphisms.Endomorphism):
        labels = list(subject.basis.generators)
        columns = list(range(subject.rank))
        images = [image.letters for image in subject.images]
        return labels, columns, images, False
    raise TypeError('Cannot build a transition matrix for {0!r}'.format(
        type(subject).__name__))


def transition_matrix(subject):
    """Return ``(labels, matrix)`` for a representative, candidate or map."""
    labels, columns, images, _ = _rows(subject)
    position = {column: k for k, column in enumerate(columns)}
    matrix = numpy.zeros((len(columns), len(columns)), dtype=int)
    for row, image in enumerate(images):
        for column, _ in image:
            matrix[row, position[column]] += 1
    return labels, matrix


def spectral_radius(matrix):
    """Largest absolute eigenvalue of a square matrix.

    Triangular matrices are read off the diagonal.
    """
    if matrix.size == 0:
        return 0.0
    upper = numpy.triu(matrix, k=1).any()
    if not upper or not numpy.tril(matrix, k=-1).any():
        return float(numpy.max(numpy.abs(numpy.diag(matrix))))
    return float(numpy.max(numpy.abs(numpy.linalg.eigvals(matrix))))


def is_unitriangular(matrix):
    """``True`` for ones on the diagonal and zeros above it."""
    return (bool((numpy.diag(matrix) == 1).all()) and
            not numpy.triu(matrix, k=1).any())


def transition_analysis(subject, tolerance=misc.SPECTRAL_TOLERANCE):
    """Build the transition matrix and decide exponential growth.

    :param subject: A verified
        :class:`~freebycyclic.representatives.FilteredRepresentative`, an
        unordered :class:`~freebycyclic.validators.Candidate` or an
        :class:`~freebycyclic.endomorphisms.Endomorphism` on a rose.
    :param float tolerance: Margin above one for the exponential verdict.
    :rtype: TransitionReport
    """
    labels, _, _, ordered = _rows(subject)
    labels, matrix = transition_matrix(subject)
    radius = spectral_radius(matrix)
    exponential = radius > 1 + tolerance
    unitriangular = is_unitriangular(matrix) if ordered else None
    log.debug('transition matrix for %s has spectral radius %.6f',
              ', '.join(labels), radius)
    return TransitionReport(tuple(labels), matrix, radius, exponential,
                            unitriangular)
