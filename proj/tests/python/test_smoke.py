import json
import math
import os
import subprocess

import pytest

import qcx


def test_extremal_equality_and_area():
    f = qcx.extremal_theorem1(0.5, 0, 0.6)
    ws = qcx.weighted_sums(f)
    assert ws.sum_n_sq + ws.sq_tail_bound == pytest.approx(0.36 / 0.5625, abs=1e-12)
    report = qcx.area_report(f, 2048)
    assert report.quadrature_area == pytest.approx(math.pi * 0.64 / 0.5625, rel=1e-10)
    check = qcx.area_theorem_check(f, 0.6)
    assert check.passed and check.equality


def test_evaluate_and_errors():
    f = qcx.PoledFunction(0.0)
    assert f(0.5) == pytest.approx(2.0)
    with pytest.raises(qcx.DomainError):
        qcx.evaluate_inside(f, 1.5)
    with pytest.raises(qcx.SingularityError):
        f(0.0)
    with pytest.raises(qcx.InvalidParameter):
        qcx.extremal_theorem1(0.5, 0, 1.2)
    with pytest.raises(qcx.PoleMismatch):
        qcx.hadamard_product(qcx.PoledFunction(0.1), qcx.PoledFunction(0.2))


def test_dilatation_of_extensions():
    m = qcx.build_extremal_extension(0.5, 0, 0.6)
    assert qcx.dilatation(m, 2.0) == pytest.approx(0.6)
    sweep = qcx.sweep_dilatation(m)
    assert abs(sweep.sup - 0.6) < 1e-10 and abs(sweep.inf - 0.6) < 1e-10
    assert qcx.boundary_mismatch(m, 512) < 1e-12

    omega = qcx.AnalyticPart.polynomial([0, 0.8 / 2.25])
    m2 = qcx.build_theorem2_extension(omega, 0.5)
    assert qcx.sup_dilatation(m2) <= 0.8 + 1e-8


def test_python_callable_omega():
    omega = qcx.AnalyticPart.from_callable(lambda z: 0.1 * z * z, lambda z: 0.2 * z, 0.2)
    m = qcx.build_theorem2_extension(omega, 0.3)
    assert qcx.sup_dilatation(m, qcx.AnnulusGrid(1.001, 10.0, 8, 16)) <= 0.338 + 1e-12
    coeffs = qcx.coefficients_from_omega(lambda z: 0.1 * z * z, 4, 0.5)
    assert abs(coeffs[2] - 0.1) < 1e-12


def test_certificates_and_probe():
    assert qcx.theorem3_certificate(0.5, 0.5, 0.0).witness_k == pytest.approx(0.25)
    cert = qcx.corollary1_certificate(qcx.PoledFunction(0.5, [0, 0.2, 0.1]))
    assert cert.valid and cert.witness_k == pytest.approx(0.9)
    assert json.loads(cert.to_json())["test"] == "corollary1"
    r = qcx.injectivity_probe(qcx.PoledFunction(0.0, [0, 3.0]), 0.5, 20000, 3)
    assert not r.meets_bound


@pytest.mark.skipif("QCX_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_pipeline():
    cli = os.environ["QCX_CLI"]
    ext = subprocess.run([cli, "extremal", "--p", "0.5", "--a1", "0.6"],
                         capture_output=True, text=True, check=True)
    area = subprocess.run([cli, "area-check", "--k", "0.6", "-"], input=ext.stdout,
                          capture_output=True, text=True)
    assert area.returncode == 0
    report = json.loads(area.stdout)
    lib = qcx.area_report(qcx.extremal_theorem1(0.5, 0, 0.6), 1024)
    assert report["quadrature_area"] == lib.quadrature_area
    bad = subprocess.run([cli, "certify", "--test", "corollary1", "-"], input="{oops",
                         capture_output=True, text=True)
    assert bad.returncode == 2
