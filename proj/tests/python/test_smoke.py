"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import fibsum


def test_sequences():
    assert fibsum.fib(0) == 0
    assert fibsum.fib(10) == 55
    assert fibsum.lucas(10) == 123
    assert fibsum.fib(300) == fibsum.fib(299) + fibsum.fib(298)


def test_quadratic_arithmetic():
    phi = fibsum.Quadratic.phi()
    assert str(phi * phi) == "(3+1*sqrt5)/2"
    assert str(phi + phi.conj()) == "1"
    assert phi.to_decimal(10) == "1.6180339887"
    assert str(fibsum.phi_pow(3)) == "(2+1*sqrt5)/1"
    assert not fibsum.Quadratic.sqrt5().is_rational()
    assert fibsum.Quadratic("143/960") == fibsum.Quadratic("143/960")


def test_catalog_round_trip():
    ids = fibsum.catalog_ids()
    assert len(ids) >= 40
    assert "A3" in ids and "N4L" in ids

    info = fibsum.entry_info("A3")
    assert "odd" in info["parity"]

    assert fibsum.validate_params("A3", 1, 1, 3)
    assert not fibsum.validate_params("A3", 2, 1, 1)

    assert str(fibsum.closed_form("A3", 1, 1, 3)) == "143/960"
    assert Fraction(fibsum.term_at("J1", 1, 1, 2, 0, 1)) == Fraction(3, 4)

    partial = Fraction(fibsum.partial_sum("A3", 1, 1, 3, 0, 64))
    assert abs(partial - Fraction(143, 960)) < Fraction(1, 10**15)


def test_identities_and_verification():
    assert fibsum.check_identity("8a", 7, 3)
    assert len(fibsum.identity_ids()) == 13
    sweep = fibsum.sweep_identities(100, 50, 42)
    assert sweep["pass"] and sweep["failures"] == []

    report = fibsum.verify_infinite("J1", 3, 2, 2)
    assert report["status"] == "pass"
    assert report["rhs"] == "1288981/35850395750400"

    finite = fibsum.verify_finite("oy4215f", 1, 2, 1, 0, 6)
    assert finite["status"] == "pass"

    skipped = fibsum.verify_finite("medhcfp", 1, 1, 1, 0, 5)
    assert skipped["status"] == "skipped-invalid-params"


def test_reference_examples_reflect_known_errata():
    reports = fibsum.reference_examples()
    assert len(reports) == 23
    failures = [r for r in reports if r["status"] == "fail"]
    assert {(r["entry_id"], r["params"]["m"]) for r in failures} == {("A3", 3), ("C2", 2)}


def test_errors_surface_as_python_exceptions():
    with pytest.raises(KeyError):
        fibsum.entry_info("ZZ")
    with pytest.raises(ValueError):
        fibsum.term_at("A3", 2, 1, 1, 0, 1)
    with pytest.raises(ValueError):
        fibsum.check_identity("8a", 2, 5)
