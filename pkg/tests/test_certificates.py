"""Tests for certificate serialization, verification and HTML reports."""

import json

import pytest

from certificates import SCHEMA, ReportGenerator, canonical_json
from certificates.verify import verify_certificate
from polys import FieldSpec, Ring
from saito import Block, block_sequence, check_divisor_free, check_sequence, positive_char_split
from sequences import SequenceSpec

from tests.conftest import make_ring


@pytest.fixture
def quartic_cert(eg3_quartic, eg3_nu):
    return check_divisor_free(eg3_quartic, eg3_nu)


@pytest.fixture
def split_cert():
    ring = make_ring(3, p=3)
    return positive_char_split(SequenceSpec((ring.parse("x0*x1*x2"),)))


def test_canonical_json_is_sorted():
    """Test that canonical JSON sorts keys and ends with a newline."""
    text = canonical_json({"b": 1, "a": ["θ"]})

    assert text == '{\n  "a": [\n    "θ"\n  ],\n  "b": 1\n}\n'


def test_divisor_certificate_payload(quartic_cert):
    """Test the echoed inputs and derived fields of a divisor certificate."""
    payload = quartic_cert.generate()

    assert payload["schema"] == SCHEMA
    assert payload["kind"] == "divisor"
    assert payload["verdict"] == "Free"
    assert payload["h"] == "6"
    assert payload["field"] == {"kind": "rationals"}
    assert payload["variables"] == ["x0", "x1", "x2", "x3"]
    assert payload["order"] == "grevlex"
    assert payload["gamma"] == "euler"
    assert payload["twists"] == [-1, -1, -1]
    assert payload["chern"] == {"sum_e": 3, "sum_d_minus_gcd_degree": 3, "balanced": True}


def test_to_json_is_deterministic(eg3_quartic, eg3_nu):
    """Test that two runs produce byte-identical certificates."""
    first = check_divisor_free(eg3_quartic, eg3_nu).to_json()
    second = check_divisor_free(eg3_quartic, eg3_nu).to_json()

    assert first == second
    assert json.loads(first)["h"] == "6"


def test_dump_creates_parent_directories(tmp_path, quartic_cert):
    """Test that dump writes canonical JSON into a fresh directory."""
    target = tmp_path / "nested" / "quartic.json"
    quartic_cert.dump(target)

    assert target.read_text(encoding="utf-8") == quartic_cert.to_json()


def test_verify_accepts_genuine_certificates(quartic_cert, split_cert, eg3_d4_sigma, eg3_d4_nu):
    """Test that freshly emitted certificates of every kind verify."""
    sequence_cert = check_sequence(eg3_d4_sigma, eg3_d4_nu)

    for cert in (quartic_cert, sequence_cert, split_cert):
        result = verify_certificate(json.loads(cert.to_json()))
        assert result.ok, result.problems


def test_verify_catches_tampering(quartic_cert):
    """Test that an edited h breaks the identity and the verdict."""
    payload = json.loads(quartic_cert.to_json())
    payload["h"] = "x0"

    result = verify_certificate(payload)
    assert not result.ok
    assert "g_theta * g_alpha != h * g_alphagamma" in result.problems
    assert "verdict does not follow from h" in result.problems


def test_verify_catches_wrong_splitting(quartic_cert):
    """Test that splitting degrees must follow from nu."""
    payload = json.loads(quartic_cert.to_json())
    payload["splitting_degrees"] = [1, 1, 2]

    assert not verify_certificate(payload).ok


def test_verify_checks_block_determinant():
    """Test that the block-ordered determinant is recomputed and its sign matters."""
    ring = Ring(FieldSpec.rationals(), ("x00", "x01", "x10", "x11"))
    assembled = block_sequence(
        [Block(("x00", "x01"), (ring.parse("x00*x01"),)), Block(("x10", "x11"), (ring.parse("x10*x11"),))]
    )
    payload = json.loads(check_sequence(assembled.sigma, assembled.nu, assembled.gamma).to_json())
    assert verify_certificate(payload).ok

    payload["det_theta_blocks"] = payload["det_theta"]
    result = verify_certificate(payload)
    assert not result.ok
    assert "det_theta_blocks is -4*x00*x01*x10*x11, recomputed 4*x00*x01*x10*x11" in result.problems


def test_verify_split_catches_wrong_d(split_cert):
    """Test that a changed d on a split certificate is reported."""
    payload = json.loads(split_cert.to_json())
    payload["d"] = 2

    result = verify_certificate(payload)
    assert not result.ok
    assert "d should be 1" in result.problems


@pytest.mark.parametrize(
    "edit, message",
    [
        ({"schema": "other/1"}, "unsupported schema 'other/1'"),
        ({"kind": "mystery"}, "unknown certificate kind 'mystery'"),
    ],
)
def test_verify_rejects_foreign_payloads(quartic_cert, edit, message):
    """Test schema and kind checks."""
    payload = {**quartic_cert.generate(), **edit}

    assert verify_certificate(payload).problems == [message]


def test_verify_reports_missing_and_malformed_fields(quartic_cert):
    """Test that missing keys and unparsable polynomials become problems, not exceptions."""
    payload = quartic_cert.generate()
    del payload["nu"]
    assert verify_certificate(payload).problems == ["missing key 'nu'"]

    payload = quartic_cert.generate()
    payload["h"] = "x0 +"
    problems = verify_certificate(payload).problems
    assert len(problems) == 1
    assert problems[0].startswith("SyntaxError")


def test_report_renders_certificates(tmp_path, quartic_cert, split_cert):
    """Test that the HTML report lists each certificate with its verdict."""
    report = ReportGenerator("regression run")
    report.add("quartic", quartic_cert)
    report.add("triangle", split_cert.generate())
    report.generate()

    assert "<title>regression run</title>" in report.html
    assert "2 certificates" in report.html
    assert 'class="verdict-Free"' in report.html
    assert "GF(3)" in report.html
    assert "oracle degrees" in report.html

    output = tmp_path / "report.html"
    report.dump(output)
    assert output.read_text(encoding="utf-8") == report.html


def test_report_escapes_markup():
    """Test that payload text is HTML-escaped."""
    report = ReportGenerator("<script>")
    report.generate()

    assert "&lt;script&gt;" in report.html
    assert "0 certificates" in report.html
