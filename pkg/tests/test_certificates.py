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
"""Tests for thickness certificates."""
import pytest

from freebycyclic import api
from freebycyclic import certificates
from freebycyclic import exceptions


def test_order_equals_degree(certifiable):
    """Verify that the certified order is the growth degree."""
    spec, order = certifiable
    certificate = api.certify(spec)
    assert certificate.order == order
    assert certificate.eta == order
    assert certificates.DIVERGENCE_LOWER_BOUND in certificate.citations


def test_identity_is_a_product_leaf():
    """Verify the order-zero witness of F2 x Z."""
    certificate = api.certify(api.fixture('identity2'))
    assert certificate.is_leaf
    assert certificate.kind == certificates.ORDER0_PRODUCT
    assert certificate.witness == 'F(a, b) x <t>'
    assert certificate.children == ()
    assert list(certificate.walk()) == [certificate]


def test_remark_certificate(remark):
    """Verify the splitting and network of the linear example."""
    certificate = api.certify(remark)
    assert certificate.kind == certificates.SPLITTING
    assert certificate.edges == ('e0', 'e1', 'e2', 'e3')
    assert certificate.splitting.relations == (
        'e3^-1 t e3 = e0 e1 e2^-1 t',)
    assert certificate.splitting.graph_kind == 'hnn'
    assert certificate.network.w0 == ('W0.1 = <e0, t>',)
    assert certificate.network.w1 == (
        'T(e1) = <t, e0>', 'T(e2) = <t, e0>', 'T(e3) = <t, e0 e1 e2^-1>')
    assert 'W0.1 ~ T(e3) via t' in certificate.network.adjacency
    assert certificate.network.connected
    assert certificate.network.chain_bound == 1
    assert certificate.e_witnesses == ('e1: e0', 'e2: e0', 'e3: e0')
    assert certificate.citations == (certificates.QUASICONVEXITY,
                                     certificates.DIVERGENCE_LOWER_BOUND)


def test_chain_certificate_recurses(chain):
    """Verify that the quadratic chain recurses into a linear rose."""
    certificate = api.certify(chain)
    assert certificate.splitting.kind == 'e-set-removal'
    assert certificate.splitting.removed == ('c',)
    assert certificate.e_witnesses == ('c: b',)
    (child,) = certificate.children
    assert child.order == 1
    assert child.edges == ('a', 'b')
    assert child.network.w1 == ('T(b) = <t, a>',)
    assert certificates.LINEAR_ORDER in certificate.citations


def test_chain4_certificate_depth():
    """Verify the nesting of the cubic chain."""
    certificate = api.certify(api.fixture('chain4'))
    assert [node.order for node in certificate.walk()] == [3, 2, 1]
    assert [node.eta for node in certificate.walk()] == [3, 2, 1]


def test_doomed_bridge_certificate(doomed_bridge):
    """Verify the doomed edges and vertices recorded for the bridge."""
    certificate = api.certify(doomed_bridge)
    splitting = certificate.splitting
    assert splitting.removed == ('c', 'd')
    assert sorted(splitting.doomed_edges) == ['c', 'd', 'e']
    assert splitting.doomed_vertices == ('v', 'w')
    assert splitting.pieces == ('a b at u: thick-vertex',)
    (child,) = certificate.children
    assert child.order == 1
    assert child.network.w0 == ('W0.1 = <a, t>',)


def test_power_is_recorded(chain):
    """Verify that the power of the represented map is kept."""
    f = api.representative(chain)
    certificate = certificates.certify_thickness(f, power=3)
    assert all(node.power == 3 for node in certificate.walk())


def test_exponential_growth_is_refused(fibonacci):
    """Verify that growth is refused before the graph map is checked."""
    with pytest.raises(exceptions.ExponentialGrowthRefused) as excinfo:
        api.certify(fibonacci)
    assert excinfo.value.profile.is_exponential
    with pytest.raises(exceptions.VerificationError):
        api.representative(fibonacci)


def test_unrepresentative_graph_map_is_refused(two_loops):
    """Verify that edge growth above the map's growth fails verification."""
    with pytest.raises(exceptions.VerificationError):
        api.certify(two_loops)


def test_summaries_are_plain_values(remark):
    """Verify that certificates hold only strings, integers and tuples."""
    certificate = api.certify(remark)

    def plain(value):
        if isinstance(value, tuple):
            return all(plain(item) for item in value)
        return value is None or isinstance(value, (str, int, bool))

    assert plain(certificate)

