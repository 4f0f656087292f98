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
"""Growth functions of free-group endomorphisms and their classification.

The growth function of a map ``phi`` over a basis ``S`` is::

    GR(n) = max(len(phi**n (s)) for s in S)

It is either exponential or polynomial of some degree ``eta <= rank``.
"""
from collections import namedtuple
import logging

import numpy

from . import endomorphisms
from . import exceptions
from . import misc
from . import transitions

__all__ = ('GrowthProfile', 'growth_function', 'classify_growth',
           'classify_samples', 'growth_degree')

log = logging.getLogger(__name__)

POLYNOMIAL = 'polynomial'
EXPONENTIAL = 'exponential'
INCONCLUSIVE = 'inconclusive'

EXPONENTIAL_BRANCH = ('relatively hyperbolic with thick peripheral subgroups '
                      '(not certified here)')


class GrowthProfile(namedtuple('GrowthProfile', [
        'samples', 'rank', 'truncated', 'classification', 'eta', 'slope',
        'residual', 'ratio'])):
    """Sampled growth function with its classification.

    .. attribute:: samples

        Tuple of ``(n, GR(n))`` pairs for ``n = 1, 2, ...``.

    .. attribute:: rank

        Rank of the basis the map acts on.

    .. attribute:: truncated

        ``True`` when sampling stopped at the word-length cap.

    .. attribute:: classification

        ``None`` until classified, then ``'polynomial'``, ``'exponential'``
        or ``'inconclusive'``.

    .. attribute:: eta

        Polynomial degree when the classification is polynomial.

    .. attribute:: slope

        Least-squares slope of ``log GR`` against ``log n`` over the tail.

    .. attribute:: residual

        Root-mean-square residual of that fit.

    .. attribute:: ratio

        Median of ``GR(n + 1) / GR(n)`` over the tail.
    """

    __slots__ = ()

    def __new__(cls, samples, rank, truncated=False, classification=None,
                eta=None, slope=None, residual=None, ratio=None):
        """Create a new GrowthProfile."""
        return super(GrowthProfile, cls).__new__(
            cls, tuple(samples), rank, truncated, classification, eta, slope,
            residual, ratio)

    @property
    def values(self):
        """The sampled ``GR(n)`` values in order."""
        return [value for _, value in self.samples]

    def value(self, n):
        """Return ``GR(n)``."""
        return dict(self.samples)[n]

    @property
    def is_polynomial(self):
        """``True`` for a polynomial classification."""
        return self.classification == POLYNOMIAL

    @property
    def is_exponential(self):
        """``True`` for an exponential classification."""
        return self.classification == EXPONENTIAL

    def describe(self):
        """Return a one-line summary of the classification."""
        if self.classification == POLYNOMIAL:
            return 'polynomial of degree {0}'.format(self.eta)
        if self.classification == EXPONENTIAL:
            return 'exponential (ratio {0:.4f}): {1}'.format(
                self.ratio, EXPONENTIAL_BRANCH)
        if self.classification == INCONCLUSIVE:
            return 'inconclusive (slope {0:.3f}, residual {1:.3f})'.format(
                self.slope, self.residual)
        return 'unclassified'


def growth_function(phi, max_n=misc.DEFAULT_MAX_N, word_cap=None):
    """Sample the growth function of ``phi`` for ``1 <= n <= max_n``.

    Every iterate is reduced as it is built; the previous images are mapped
    again rather than expanding ``phi**n`` symbolically.

    :param phi: The :class:`~freebycyclic.endomorphisms.Endomorphism`.
    :param int max_n: Largest exponent sampled.
    :param int word_cap: (optional) Longest image allowed; defaults to the
        environment budget.
    :returns: An unclassified profile, marked truncated if the cap stopped
        sampling early.
    :rtype: GrowthProfile
    :raises freebycyclic.exceptions.InputError: If ``max_n`` is below 1.
    """
    if max_n < 1:
        raise exceptions.InputError('max_n must be at least 1')
    if word_cap is None:
        word_cap = misc.Budgets.from_environ().word_cap
    current = phi.basis.gens()
    samples = []
    truncated = False
    for n in range(1, max_n + 1):
        try:
            current = [endomorphisms.apply(phi, word, word_cap=word_cap)
                       for word in current]
        except exceptions.WordLengthExceeded as error:
            log.info('growth sampling truncated at n=%d: %s', n, error)
            truncated = True
            break
        samples.append((n, max(word.length for word in current)))
    log.debug('growth samples: %s', samples)
    return GrowthProfile(samples, phi.rank, truncated=truncated)


def _tail(samples):
    return samples[len(samples) // 2:]


def classify_samples(samples, rank, truncated=False, spectral_radius=None):
    """Classify raw ``(n, GR(n))`` samples.

    The rule: exponential when the median tail ratio exceeds
    :data:`~freebycyclic.misc.EXPONENTIAL_RATIO`; otherwise polynomial of
    the rounded log-log slope when the fit residual is below
    :data:`~freebycyclic.misc.RESIDUAL_THRESHOLD` and the degree is at most
    ``rank``; otherwise inconclusive.

    A polynomial of high degree also has tail ratios above the threshold
    at a short horizon. When the spectral radius of the transition matrix
    is known and does not exceed one, unreduced iterates already grow
    polynomially, so the ratio test is overruled.

    :param float spectral_radius: (optional) Spectral radius of the
        transition matrix of the map that produced the samples.
    :raises freebycyclic.exceptions.TooFewSamples:
        If fewer than :data:`~freebycyclic.misc.MIN_SAMPLES` samples exist.
    """
    samples = tuple(samples)
    if len(samples) < misc.MIN_SAMPLES:
        raise exceptions.TooFewSamples(len(samples), misc.MIN_SAMPLES)
    tail = _tail(samples)
    exponents = numpy.array([n for n, _ in tail], dtype=float)
    values = numpy.array([value for _, value in tail], dtype=float)
    profile = GrowthProfile(samples, rank, truncated=truncated)
    if (values <= 0).any():
        log.info('growth function vanishes; the map is not injective')
        return profile._replace(classification=INCONCLUSIVE, slope=0.0,
                                residual=float('inf'), ratio=0.0)
    ratio = float(numpy.median(values[1:] / values[:-1]))
    log_n = numpy.log(exponents)
    log_values = numpy.log(values)
    slope, intercept = numpy.polyfit(log_n, log_values, 1)
    fitted = slope * log_n + intercept
    residual = float(numpy.sqrt(numpy.mean((log_values - fitted) ** 2)))
    slope = float(slope)
    profile = profile._replace(slope=slope, residual=residual, ratio=ratio)
    spectrally_polynomial = (spectral_radius is not None and
                             spectral_radius <= 1 + misc.SPECTRAL_TOLERANCE)
    if ratio > misc.EXPONENTIAL_RATIO and not spectrally_polynomial:
        classification, eta = EXPONENTIAL, None
    else:
        eta = max(int(round(slope)), 0)
        if residual < misc.RESIDUAL_THRESHOLD and eta <= rank:
            classification = POLYNOMIAL
        else:
            classification, eta = INCONCLUSIVE, None
    log.debug('classified growth: %s (slope %.4f, residual %.4f, '
              'ratio %.4f, spectral radius %s)', classification, slope,
              residual, ratio, spectral_radius)
    return profile._replace(classification=classification, eta=eta)


def classify_growth(profile, spectral_radius=None):
    """Classify a sampled :class:`GrowthProfile`.

    :returns: The same samples with classification, degree and fit
        diagnostics filled in.
    :rtype: GrowthProfile
    """
    return classify_samples(profile.samples, profile.rank,
                            truncated=profile.truncated,
                            spectral_radius=spectral_radius)


def growth_degree(phi, max_n=misc.DEFAULT_MAX_N, word_cap=None):
    """Sample and classify the growth of ``phi`` in one step.

    The spectral radius of the transition matrix of ``phi`` settles maps
    whose tail ratio alone would be read as exponential.
    """
    radius = transitions.transition_analysis(phi).spectral_radius
    return classify_growth(growth_function(phi, max_n, word_cap=word_cap),
                           spectral_radius=radius)
