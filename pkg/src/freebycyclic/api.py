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
"""
Module containing the simple and functional API for freebycyclic.

This module defines functions and provides access to the public attributes
and classes of freebycyclic.
"""
import io
import pkgutil

from . import certificates
from . import endomorphisms
from . import growth
from . import misc
from . import specfile
from . import validators

FIXTURE_SUFFIX = '.fbc'


def spec_from_text(text):
    """Parse the text of a spec file into a :class:`SpecFile`."""
    return specfile.parse_spec(text)


def spec_from_file(path, encoding='utf-8'):
    """Read and parse a spec file.

    :param str path: Location of the file.
    :param str encoding: The encoding of the file.
    :rtype: :class:`~freebycyclic.specfile.SpecFile`
    """
    with io.open(path, encoding=encoding) as handle:
        return specfile.parse_spec(handle.read())


def fixture(name):
    """Return a bundled spec file, such as ``'remark'`` or ``'chain'``."""
    data = pkgutil.get_data(__package__, 'fixtures/' + name + FIXTURE_SUFFIX)
    return specfile.parse_spec(data.decode('utf-8'))


def automorphism(spec):
    """Return the certified automorphism a spec file describes.

    :raises freebycyclic.exceptions.NotAnAutomorphism:
        If the map is not invertible.
    """
    return endomorphisms.certified(spec.endomorphism())


def representative(spec):
    """Verify the spec's graph map and return the representative."""
    return validators.verify_representative(spec.candidate())


def classify(spec, max_n=misc.DEFAULT_MAX_N):
    """Sample and classify the growth of the spec's automorphism.

    :rtype: :class:`~freebycyclic.growth.GrowthProfile`
    """
    return growth.growth_degree(automorphism(spec), max_n)


def certify(spec, max_n=misc.DEFAULT_MAX_N):
    """Certify the thickness of the spec's mapping torus.

    Growth is classified before the graph map is verified, so an
    exponential map is refused rather than rejected as a representative.

    :rtype: :class:`~freebycyclic.certificates.ThicknessCertificate`
    :raises freebycyclic.exceptions.ExponentialGrowthRefused:
        If the automorphism grows exponentially.
    """
    certificates.require_polynomial(classify(spec, max_n))
    return certificates.certify_thickness(representative(spec), max_n,
                                          power=spec.power)
