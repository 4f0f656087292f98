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
Growth, thickness and divergence of free-by-cyclic groups.

A free-by-cyclic group is the mapping torus of an automorphism of a free
group. For polynomially growing automorphisms this package certifies that
the mapping torus is strongly thick of order equal to the growth degree,
and samples its divergence on Cayley balls.

:license: Apache v2.0, see LICENSE for details
"""
import logging

from .api import automorphism
from .api import certify
from .api import classify
from .api import fixture
from .api import representative
from .api import spec_from_file
from .api import spec_from_text
from .certificates import ThicknessCertificate
from .endomorphisms import Endomorphism
from .normal_form import MappingTorus
from .normal_form import NormalForm
from .specfile import SpecFile
from .words import FreeBasis
from .words import Word

__title__ = 'freebycyclic'
__author__ = 'The freebycyclic developers'
__license__ = 'Apache v2.0'
__copyright__ = 'Copyright 2026 The freebycyclic developers'
__version__ = '1.0.0'

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = (
    'Endomorphism',
    'FreeBasis',
    'MappingTorus',
    'NormalForm',
    'SpecFile',
    'ThicknessCertificate',
    'Word',
    'automorphism',
    'certify',
    'classify',
    'fixture',
    'representative',
    'spec_from_file',
    'spec_from_text',
    '__title__',
    '__author__',
    '__license__',
    '__copyright__',
    '__version__',
)
