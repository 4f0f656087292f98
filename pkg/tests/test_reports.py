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
"""Tests for running commands and rendering reports."""
import hashlib

import pytest

import freebycyclic
from freebycyclic import api
from freebycyclic import certificates
from freebycyclic import exceptions
from freebycyclic import growth
from freebycyclic import reports


def test_growth_report(remark):
    """Verify the classification of the linear example."""
    report = reports.execute('growth', remark)
    assert report.exit_code == 0
    assert report.refusal is None
    assert report.certificate is None
    assert report.metrics == ()
    assert report.classification.growth == growth.POLYNOMIAL
    assert report.classification.eta == 1
    assert report.classification.spectral_radius == 1.0
    assert report.classification.branch is None


def test_certify_report(chain):
    """Verify that certify attaches the certificate."""
    report = reports.execute('certify', chain)
    assert report.exit_code == 0
    assert report.certificate == api.certify(chain)


def test_divergence_report(f2_by_z_spec):
    """Verify the divergence rows."""
    report = reports.execute('divergence', f2_by_z_spec, radii=(2, 3),
                             horizon=2)
    assert report.exit_code == 0
    assert [row.radius for row in report.metrics] == [2, 3]
    assert [row.bound for row in report.metrics] == [8, 12]
    for row in report.metrics:
        assert row.chi == row.path_length
        assert ' ; ' in row.witness


def test_analyze_does_everything(f2_by_z_spec):
    """Verify that analyze classifies, certifies and samples."""
    report = reports.execute('analyze', f2_by_z_spec, radii=(2,), horizon=2)
    assert report.exit_code == 0
    assert report.certificate.order == 0
    assert len(report.metrics) == 1
    assert report.classification.eta == 0


def test_analyze_presents_the_mapping_torus(remark):
    """Verify the presentation block of an analyze report."""
    report = reports.execute('analyze', remark)
    assert report.presentation.generators == ('e0', 'e1', 'e2', 'e3', 't')
    assert report.presentation.relations == (
        't e0 t^-1 = e0', 't e1 t^-1 = e1 e0', 't e2 t^-1 = e2 e0',
        't e3 t^-1 = e3 e0 e1 e2^-1')
    lines = reports.render(report).decode('utf-8').splitlines()
    assert '  [presentation]' in lines
    assert '    relations = t e1 t^-1 = e1 e0' in lines
    assert reports.execute('certify', remark).presentation is None


def test_exponential_map_is_refused(fibonacci):
    """Verify that certify refuses an exponential map with exit status 3."""
    report = reports.execute('certify', fibonacci)
    assert report.exit_code == 3
    assert report.certificate is None
    assert report.classification.growth == growth.EXPONENTIAL
    assert report.classification.branch == growth.EXPONENTIAL_BRANCH
    assert report.refusal.reason == (
        exceptions.ExponentialGrowthRefused.reason_code)


def test_exponential_map_still_classifies(fibonacci):
    """Verify that growth alone succeeds for an exponential map."""
    report = reports.execute('growth', fibonacci)
    assert report.exit_code == 0
    assert report.classification.ratio == pytest.approx(1.618, rel=0.02)


def test_unrepresentative_graph_map_fails_verification(two_loops):
    """Verify exit status 2 when edge growth exceeds the map's growth."""
    report = reports.execute('certify', two_loops)
    assert report.exit_code == 2
    assert report.classification.eta == 0


def test_declared_inverse_is_checked():
    """Verify that a wrong declared inverse fails verification."""
    spec = api.spec_from_text(
        'basis: a b\nmap: a -> a\nmap: b -> b a\n'
        'inverse: a -> a\ninverse: b -> b a\n')
    report = reports.execute('growth', spec)
    assert report.exit_code == 2
    assert 'b' in report.refusal.message


def test_non_automorphism_fails_verification():
    """Verify that a non-invertible map is refused."""
    spec = api.spec_from_text('basis: a b\nmap: a -> a a\nmap: b -> b\n')
    report = reports.execute('growth', spec)
    assert report.exit_code == 2
    assert report.classification is None


def test_budget_from_environment(f2_by_z_spec):
    """Verify that a small ball budget ends divergence with status 4."""
    report = reports.execute('divergence', f2_by_z_spec, radii=(4,),
                             environ={'FREEBYCYCLIC_BALL_BUDGET': '10'})
    assert report.exit_code == 4
    assert report.refusal.reason == exceptions.BudgetExceeded.reason_code


def test_bad_environment_is_an_input_error(remark):
    """Verify that an unusable budget variable exits with status 1."""
    report = reports.execute('growth', remark,
                             environ={'FREEBYCYCLIC_WORD_CAP': 'lots'})
    assert report.exit_code == 1


def test_unknown_command(remark):
    """Verify that an unknown command is an input error."""
    with pytest.raises(exceptions.InputError):
        reports.execute('frobnicate', remark)


@pytest.mark.parametrize('error, code', [
    (exceptions.SpecParseError(3, 'x', 'bad'), 1),
    (exceptions.NotNielsenPath('e'), 2),
    (exceptions.ConsistencyError('broken'), 2),
    (exceptions.NotLinear(2), 3),
    (exceptions.TooFewSamples(2, 8), 3),
    (exceptions.BudgetExceeded(10, 11), 4),
    (exceptions.WordLengthExceeded(10, 11), 4),
])
def test_exit_codes(error, code):
    """Verify the exit status of each kind of failure."""
    assert reports.exit_code_for(error) == code


def test_provenance(remark):
    """Verify the input hash and the recorded parameters."""
    report = reports.execute('certify', remark, max_n=32)
    expected = hashlib.sha256(remark.text.encode('utf-8')).hexdigest()
    assert report.provenance.input_sha256 == expected
    assert report.provenance.parameters == (
        'command=certify', 'max_n=32', 'power=1')
    assert report.provenance.tool_version == freebycyclic.__version__


def test_power_override(chain):
    """Verify that the power argument reaches the certificate."""
    report = reports.execute('certify', chain, power=2)
    assert report.certificate.power == 2
    assert 'power=2' in report.provenance.parameters


def test_reports_are_reproducible(remark):
    """Verify that rendering the same command twice gives the same bytes."""
    first = reports.render(reports.execute('certify', remark))
    second = reports.render(reports.execute('certify', remark))
    assert first == second


@pytest.mark.parametrize('command, name, kwargs', [
    ('certify', 'remark', {}),
    ('certify', 'chain', {}),
    ('certify', 'doomed_bridge', {}),
    ('certify', 'fibonacci', {}),
    ('analyze', 'identity2', {'radii': (2, 3), 'horizon': 2}),
])
def test_structured_round_trip(command, name, kwargs):
    """Verify that a structured rendering reads back into the same report."""
    report = reports.execute(command, api.fixture(name), **kwargs)
    assert reports.parse_report(reports.render(report)) == report


def test_structured_layout(remark):
    """Verify the block and field lines of a rendering."""
    lines = reports.render(
        reports.execute('certify', remark)).decode('utf-8').splitlines()
    assert lines[:3] == ['[report]', '  command = certify',
                         '  exit_code = 0']
    assert '  [certificate]' in lines
    assert '    [network]' in lines
    assert '      w1 = T(e3) = <t, e0 e1 e2^-1>' in lines
    assert '      relations = e3^-1 t e3 = e0 e1 e2^-1 t' in lines


def test_text_rendering(remark):
    """Verify the titled sections of the text rendering."""
    text = reports.render(reports.execute('certify', remark),
                          'text').decode('utf-8')
    lines = text.splitlines()
    assert lines[0] == 'Report: certify'
    assert lines[1] == '-' * len('Report: certify')
    assert '  Certificate' in lines
    assert any(line.strip().startswith('Order') and line.endswith('1')
               for line in lines)
    assert certificates.QUASICONVEXITY in text


def test_unknown_format(remark):
    """Verify that an unknown format is refused."""
    with pytest.raises(exceptions.InputError):
        reports.render(reports.execute('growth', remark), 'yaml')


@pytest.mark.parametrize('text', [
    '',
    '[certificate]\n',
    '[report]\n  command = growth\n [refusal]\n',
    '[report]\n  colour = blue\n',
    '[report]\n  [mystery]\n',
    '[report]\nnot a line\n',
])
def test_parse_report_errors(text):
    """Verify that malformed reports are rejected."""
    with pytest.raises(exceptions.SpecParseError):
        reports.parse_report(text)
