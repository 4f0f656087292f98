# -*- coding: utf-8 -*-
import sys

import pytest

from freebycyclic import api
from freebycyclic import words

# Bundled fixtures and the growth degree of each automorphism.
fixture_degrees = [
    ('identity1', 0),
    ('identity2', 0),
    ('identity3', 0),
    ('remark', 1),
    ('chain', 2),
    ('chain4', 3),
]

polynomial_fixtures = [name for name, _ in fixture_degrees]

certifiable_fixtures = [
    ('identity2', 0),
    ('remark', 1),
    ('chain', 2),
    ('doomed_bridge', 2),
    ('chain4', 3),
]

# Images of automorphisms of F(a, b, c) used by the property suites.
automorphism_images = [
    {'a': 'a', 'b': 'b a', 'c': 'c b'},
    {'a': 'a b', 'b': 'a', 'c': 'c'},
    {'a': 'b', 'b': 'c', 'c': 'a'},
    {'a': 'a^-1', 'b': 'a b a^-1', 'c': 'c a'},
    {'a': 'a', 'b': 'b', 'c': 'c'},
]


@pytest.fixture(params=fixture_degrees, ids=[n for n, _ in fixture_degrees])
def fixture_with_degree(request):
    name, degree = request.param
    return api.fixture(name), degree


@pytest.fixture(params=certifiable_fixtures,
                ids=[n for n, _ in certifiable_fixtures])
def certifiable(request):
    name, order = request.param
    return api.fixture(name), order


@pytest.fixture
def remark():
    return api.fixture('remark')


@pytest.fixture
def chain():
    return api.fixture('chain')


@pytest.fixture
def two_loops():
    return api.fixture('two_loops')


@pytest.fixture
def doomed_bridge():
    return api.fixture('doomed_bridge')


@pytest.fixture
def fibonacci():
    return api.fixture('fibonacci')


@pytest.fixture
def f2_by_z_spec():
    return api.fixture('identity2')


@pytest.fixture
def abc():
    return words.FreeBasis(['a', 'b', 'c'])


sys.path.insert(0, '.')
