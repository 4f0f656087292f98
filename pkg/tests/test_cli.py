# -*- coding: utf-8 -*-
"""Tests for the command-line entry point."""
import argparse
import io

import pytest

from freebycyclic import cli
from freebycyclic import reports

REMARK = """\
basis: e0 e1 e2 e3
map: e0 -> e0
map: e1 -> e1 e0
map: e2 -> e2 e0
map: e3 -> e3 e0 e1 e2^-1
"""

FIBONACCI = 'basis: a b\nmap: a -> a b\nmap: b -> a\n'

Z2 = 'basis: a\nmap: a -> a\n'


@pytest.fixture
def spec_path(tmp_path):
    def write(text, name='input.fbc'):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def run(argv):
    stdout = io.BytesIO()
    status = cli.main(argv, stdout=stdout)
    return status, stdout.getvalue().decode('utf-8')


@pytest.mark.parametrize('text, expected', [
    ('4', [4]),
    ('2..5', [2, 3, 4, 5]),
    ('3..3', [3]),
])
def test_parse_radii(text, expected):
    """Verify single radii and ranges."""
    assert cli.parse_radii(text) == expected


@pytest.mark.parametrize('text', ['', 'two', '5..2', '2-5', '-1'])
def test_parse_radii_errors(text):
    """Verify that malformed radii are rejected."""
    with pytest.raises(argparse.ArgumentTypeError):
        cli.parse_radii(text)


def test_certify_text(spec_path):
    """Verify a text certificate and a zero exit status."""
    status, output = run(['certify', spec_path(REMARK)])
    assert status == 0
    assert output.startswith('Report: certify\n')
    assert 'T(e3) = <t, e0 e1 e2^-1>' in output


def test_certify_structured(spec_path):
    """Verify that the structured output parses back."""
    status, output = run(['certify', spec_path(REMARK),
                          '--format', 'structured'])
    assert status == 0
    report = reports.parse_report(output)
    assert report.certificate.order == 1
    assert report.provenance.parameters == (
        'command=certify', 'max_n=64', 'power=1')


def test_divergence_range(spec_path):
    """Verify one divergence row per radius in the range."""
    status, output = run(['divergence', spec_path(Z2), '--radius', '2..4',
                          '--horizon', '2', '--format', 'structured'])
    assert status == 0
    report = reports.parse_report(output)
    assert [row.chi for row in report.metrics] == [6, 8, 12]
    assert 'radii=2,3,4' in report.provenance.parameters


def test_exponential_map_exits_three(spec_path, capsys):
    """Verify that refusing an exponential map exits with status 3."""
    status, output = run(['certify', spec_path(FIBONACCI)])
    assert status == 3
    assert 'exponential' in output
    assert 'exponential-growth' in capsys.readouterr().err


def test_missing_file_exits_one(tmp_path, capsys):
    """Verify that an unreadable spec file exits with status 1."""
    status, output = run(['growth', str(tmp_path / 'missing.fbc')])
    assert status == 1
    assert output == ''
    assert capsys.readouterr().err.startswith('freebycyclic: ')


def test_parse_error_exits_one(spec_path, capsys):
    """Verify that a malformed spec file exits with status 1."""
    status, _ = run(['growth', spec_path('basis: a\nmap: a -> b\n')])
    assert status == 1
    assert 'line 2' in capsys.readouterr().err


def test_non_automorphism_exits_two(spec_path):
    """Verify that a non-invertible map exits with status 2."""
    status, output = run(['growth', spec_path('basis: a\nmap: a -> a a\n'),
                          '--format', 'structured'])
    assert status == 2
    assert reports.parse_report(output).refusal.reason == 'not-automorphism'


def test_power_flag(spec_path):
    """Verify that --power reaches the certificate."""
    status, output = run(['certify', spec_path(REMARK), '--power', '2',
                          '--format', 'structured'])
    assert status == 0
    assert reports.parse_report(output).certificate.power == 2


@pytest.mark.parametrize('argv', [
    ['frobnicate', 'x.fbc'],
    ['certify', 'x.fbc', '--max-n', '0'],
    ['certify', 'x.fbc', '--format', 'yaml'],
    ['divergence', 'x.fbc', '--radius', 'many'],
])
def test_bad_arguments(argv):
    """Verify that argparse rejects bad arguments."""
    with pytest.raises(SystemExit) as excinfo:
        cli.main(argv, stdout=io.BytesIO())
    assert excinfo.value.code == 2
