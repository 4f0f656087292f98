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
"""Tests for normal forms and arithmetic in a mapping torus."""
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies
import pytest

from freebycyclic import api
from freebycyclic import endomorphisms
from freebycyclic import exceptions
from freebycyclic import normal_form
from freebycyclic import presentation
from freebycyclic import words

from .conftest import automorphism_images

ABC = words.FreeBasis(['a', 'b', 'c'])


def torus_for(images):
    return normal_form.MappingTorus(endomorphisms.certified(
        endomorphisms.Endomorphism.from_mapping(ABC, images)))


tori = strategies.sampled_from(automorphism_images).map(torus_for)

# Words over a, b, c and the stable letter, which is generator 3.
extended_words = strategies.lists(strategies.tuples(
    strategies.integers(min_value=0, max_value=3),
    strategies.sampled_from([1, -1])), max_size=10).map(words.free_reduce)


@settings(max_examples=1000)
@given(tori, extended_words)
def test_relators_evaluate_to_identity(torus, word):
    """Verify that conjugates of every relator are trivial."""
    presented = presentation.mapping_torus_presentation(torus.phi)
    for relator in presented.relators:
        conjugate = word * relator * word.inverse()
        assert torus.evaluate(conjugate).is_identity()


@settings(max_examples=1000)
@given(tori, extended_words, extended_words, extended_words)
def test_product_is_associative(torus, first, second, third):
    """Verify associativity of the normal-form product."""
    x, y, z = (torus.evaluate(w) for w in (first, second, third))
    assert (torus.product(torus.product(x, y), z) ==
            torus.product(x, torus.product(y, z)))


@settings(max_examples=1000)
@given(tori, extended_words, extended_words)
def test_evaluation_is_a_homomorphism(torus, first, second):
    """Verify that evaluating a product multiplies the values."""
    assert torus.evaluate(first * second) == torus.product(
        torus.evaluate(first), torus.evaluate(second))
    element = torus.evaluate(first)
    assert torus.product(element, torus.inverse(element)).is_identity()


def test_multiplication_rules():
    """Verify right multiplication by fiber letters and by t."""
    torus = torus_for({'a': 'a', 'b': 'b a', 'c': 'c'})
    t = torus.stable_element()
    b = torus.fiber_element(ABC.word('b'))
    assert torus.product(t, b) == normal_form.NormalForm(
        words.parse_word('b a', ABC), 1)
    assert torus.multiply(t, (1, 1)) == torus.product(t, b)
    assert torus.multiply(normal_form.IDENTITY, (3, -1)).t_exp == -1
    assert torus.inverse(torus.product(t, b)) == normal_form.NormalForm(
        words.parse_word('b^-1', ABC), -1)


def test_conjugate_and_commute():
    """Verify conjugation by t applies the automorphism."""
    torus = torus_for({'a': 'a', 'b': 'b a', 'c': 'c'})
    t = torus.stable_element()
    b = torus.fiber_element(ABC.word('b'))
    assert torus.conjugate(b, t) == torus.fiber_element(
        words.parse_word('b a', ABC))
    assert torus.commute(t, torus.fiber_element(ABC.word('a')))
    assert not torus.commute(t, b)


def test_power():
    """Verify powers of elements."""
    torus = torus_for({'a': 'a', 'b': 'b a', 'c': 'c'})
    element = torus.parse('b t')
    assert torus.power(element, 2) == torus.parse('b t b t')
    assert torus.power(element, -1) == torus.inverse(element)
    assert torus.power(element, 0).is_identity()


@pytest.mark.parametrize('text, rendered', [
    ('1', '1'),
    ('t', 't'),
    ('t^-2', 't^-2'),
    ('a b^-1 t', 'a b^-1 t'),
    ('t b', 'b a t'),
])
def test_format(text, rendered):
    """Verify rendering of normal forms."""
    torus = torus_for({'a': 'a', 'b': 'b a', 'c': 'c'})
    assert torus.format(torus.parse(text)) == rendered


def test_negative_exponent_needs_inverse():
    """Verify that an uncertified map cannot multiply below t^0."""
    phi = endomorphisms.Endomorphism.from_mapping(
        ABC, {'a': 'a', 'b': 'b a', 'c': 'c'})
    element = normal_form.NormalForm(words.IDENTITY, -1)
    with pytest.raises(exceptions.UncertifiedAutomorphism):
        normal_form.multiply(element, (0, 1), phi)
    assert normal_form.multiply(normal_form.IDENTITY, (1, 1), phi) == (
        normal_form.NormalForm(ABC.word('b'), 0))


def test_identity_has_finite_order():
    """Verify that only the identity has finite order."""
    assert not normal_form.IDENTITY.has_infinite_order()
    assert normal_form.NormalForm(words.IDENTITY, 1).has_infinite_order()


def test_linear_example_rules(remark):
    """Verify moving a fiber letter past t and t^-1 in the linear example."""
    torus = normal_form.MappingTorus(api.automorphism(remark))
    basis = torus.phi.basis
    t = torus.stable_element()
    t_inverse = torus.stable_element(-1)
    e1 = (basis.index('e1'), 1)
    assert torus.multiply(t, e1) == normal_form.NormalForm(
        words.parse_word('e1 e0', basis), 1)
    assert torus.multiply(t_inverse, e1) == normal_form.NormalForm(
        words.parse_word('e1 e0^-1', basis), -1)
    p3 = torus.parse('e0 e1 e2^-1')
    assert torus.conjugate(p3, t) == p3
    assert torus.commute(p3, t)


@settings(max_examples=1000)
@given(tori, extended_words, strategies.integers(min_value=0, max_value=3),
       strategies.sampled_from([1, -1]))
def test_letter_then_inverse_letter(torus, word, index, sign):
    """Verify that a letter followed by its inverse changes nothing."""
    element = torus.evaluate(word)
    there = torus.multiply(element, (index, sign))
    assert torus.multiply(there, (index, -sign)) == element
