# -*- coding: utf-8 -*-
import pytest

import freebycyclic
from freebycyclic import api
from freebycyclic import exceptions


def test_fixture():
    assert isinstance(api.fixture('remark'), freebycyclic.SpecFile)


def test_spec_from_file(tmp_path):
    path = tmp_path / 'shear.fbc'
    path.write_text('basis: a b\nmap: a -> a\nmap: b -> b a\n')
    spec = api.spec_from_file(str(path))
    assert spec == api.spec_from_text(path.read_text())


def test_automorphism_is_certified(remark):
    phi = api.automorphism(remark)
    assert isinstance(phi, freebycyclic.Endomorphism)
    assert phi.certification.is_automorphism


def test_automorphism_refuses_non_invertible_maps():
    spec = api.spec_from_text('basis: a\nmap: a -> a a\n')
    with pytest.raises(exceptions.NotAnAutomorphism):
        api.automorphism(spec)


def test_classify(chain):
    assert api.classify(chain).eta == 2


def test_certify(remark):
    certificate = api.certify(remark)
    assert isinstance(certificate, freebycyclic.ThicknessCertificate)
    assert certificate.order == 1


def test_public_names():
    for name in freebycyclic.__all__:
        assert hasattr(freebycyclic, name)
