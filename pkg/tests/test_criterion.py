"""Tests for the Saito-type freeness checks."""

import pytest

from certificates import CertificateKind, Verdict
from errors import (
    CharDividesDegree,
    DimensionMismatch,
    GammaNotMono,
    IndependenceFailed,
    NonHomogeneousInput,
    NotASyzygy,
    NuRankDeficient,
    OverlappingBlocks,
    UncoveredVariables,
)
from matrices import PolyMatrix, compare_divisors, jacobian
from polys import FieldSpec, Ring
from saito import (
    Block,
    BlockEuler,
    Euler,
    block_euler,
    block_sequence,
    check_divisor_free,
    check_sequence,
    euler_column,
)
from sequences import SequenceSpec

from tests.conftest import EG3_D3_PRINTED, make_ring

FERMAT_NU = [["x1^2", "0"], ["-x0^2", "x2^2"], ["0", "-x1^2"]]


def test_quartic_is_free(eg3_quartic, eg3_nu):
    """Test that the tangent-developable quartic is certified free with h = 6."""
    cert = check_divisor_free(eg3_quartic, eg3_nu)

    assert cert.verdict is Verdict.FREE
    assert cert.kind is CertificateKind.DIVISOR
    assert cert.h == 6
    assert cert.det_theta == 6 * eg3_quartic
    assert cert.g_alpha == 1
    assert cert.splitting_degrees == (1, 1, 1)
    assert cert.twists == (-1, -1, -1)
    assert cert.identity_holds()
    assert cert.chern_balanced


def test_printed_quartic_fails_syzygy_check(qq4, eg3_nu):
    """Test that the misprinted quartic is caught at the first nu column."""
    with pytest.raises(NotASyzygy) as excinfo:
        check_divisor_free(qq4.parse(EG3_D3_PRINTED), eg3_nu)
    assert excinfo.value.location == 0


def test_fermat_cubic_is_not_certified(qq3):
    """Test that a non-free nu yields NotCertified with a nonconstant h."""
    f = qq3.parse("x0^3 + x1^3 + x2^3")
    cert = check_divisor_free(f, PolyMatrix.from_strings(qq3, FERMAT_NU))

    assert cert.verdict is Verdict.NOT_CERTIFIED
    assert str(cert.h) == "x1^2"
    assert cert.identity_holds()
    assert not cert.is_free


def test_divisor_preconditions(qq3):
    """Test inhomogeneous input, nu of the wrong shape and char p dividing deg f."""
    nu = PolyMatrix.from_strings(qq3, FERMAT_NU)
    with pytest.raises(NonHomogeneousInput):
        check_divisor_free(qq3.parse("x0^3 + x1"), nu)
    with pytest.raises(DimensionMismatch):
        check_divisor_free(qq3.parse("x0^3 + x1^3 + x2^3"), nu.select_columns([0]))

    gf3 = make_ring(3, p=3)
    with pytest.raises(CharDividesDegree):
        check_divisor_free(gf3.parse("x0^3 + x1^3 + x2^3"), PolyMatrix.zeros(gf3, 3, 2))


def test_sequence_is_free(eg3_d4_sigma, eg3_d4_nu):
    """Test that the degree-four pair is free with theta = (nu | Euler)."""
    cert = check_sequence(eg3_d4_sigma, eg3_d4_nu)

    assert cert.verdict is Verdict.FREE
    assert cert.kind is CertificateKind.SEQUENCE
    assert cert.h == 1
    assert cert.splitting_degrees == (1, 1, 1)
    assert cert.theta.shape == (5, 4)
    assert cert.det_theta is None
    assert cert.chern_sum == 3
    assert cert.gamma == "euler"


def test_smoke_on_projective_line():
    """Test the smallest case: a point on P^1."""
    ring = make_ring(2)
    sigma = SequenceSpec((ring.parse("x0"),))
    cert = check_sequence(sigma, PolyMatrix.from_strings(ring, [["0"], ["1"]]))

    assert cert.h == 1
    assert cert.splitting_degrees == (0,)
    assert str(cert.g_alphagamma) == "x0"


def test_sequence_preconditions():
    """Test rank-deficient nu and a gamma killed by the Jacobian."""
    ring = make_ring(2)
    sigma = SequenceSpec((ring.parse("x0"),))
    nu = PolyMatrix.from_strings(ring, [["0"], ["1"]])

    with pytest.raises(NuRankDeficient):
        check_sequence(sigma, PolyMatrix.zeros(ring, 2, 1))
    with pytest.raises(GammaNotMono):
        check_sequence(sigma, nu, PolyMatrix.from_strings(ring, [["0"], ["1"]]))
    with pytest.raises(DimensionMismatch):
        check_sequence(sigma, PolyMatrix.zeros(ring, 2, 2))


def test_dependent_sequence_is_refused(qq3):
    """Test that an algebraically dependent sequence raises IndependenceFailed."""
    sigma = SequenceSpec((qq3.parse("x0"), qq3.parse("x0^2")))
    nu = PolyMatrix.from_strings(qq3, [["0"], ["0"], ["1"]])

    with pytest.raises(IndependenceFailed) as excinfo:
        check_sequence(sigma, nu)
    assert excinfo.value.witness == "y1^2 - y2"


def test_euler_columns(qq4):
    """Test the Euler column and its block variant."""
    assert euler_column(qq4).column(0) == qq4.gens()
    blocks = block_euler(qq4, [["x0", "x1"], ["x2", "x3"]])
    assert blocks.shape == (4, 2)
    assert blocks[2, 1] == qq4.gen(2)
    assert blocks[2, 0].is_zero()
    assert Euler().to_json() == "euler"
    assert BlockEuler((("x0", "x1"), ("x2", "x3"))).build(qq4) == blocks

    with pytest.raises(DimensionMismatch):
        euler_column(make_ring(1))


def test_block_partition_must_be_exact(qq4):
    """Test that overlapping or incomplete partitions are rejected."""
    with pytest.raises(OverlappingBlocks):
        block_euler(qq4, [["x0", "x1"], ["x1", "x2", "x3"]])
    with pytest.raises(UncoveredVariables) as excinfo:
        block_euler(qq4, [["x0", "x1"], ["x2"]])
    assert excinfo.value.location == ["x3"]


def free_instances(eg3_quartic, eg3_nu, eg3_d4_sigma, eg3_d4_nu):
    ring = Ring(FieldSpec.rationals(), ("x00", "x01", "x10", "x11"))
    eg1 = block_sequence(
        [
            Block(("x00", "x01"), (ring.parse("x00*x01"),)),
            Block(("x10", "x11"), (ring.parse("x10*x11"),)),
        ]
    )
    return [
        (SequenceSpec((eg3_quartic,)), check_divisor_free(eg3_quartic, eg3_nu)),
        (eg3_d4_sigma, check_sequence(eg3_d4_sigma, eg3_d4_nu)),
        (eg1.sigma, check_sequence(eg1.sigma, eg1.nu, eg1.gamma)),
    ]


def test_free_frames_have_equal_divisors(eg3_quartic, eg3_nu, eg3_d4_sigma, eg3_d4_nu):
    """Test that dv(theta) = dv(alpha theta) whenever the verdict is Free and g_alpha is 1."""
    for sigma, cert in free_instances(eg3_quartic, eg3_nu, eg3_d4_sigma, eg3_d4_nu):
        assert cert.is_free
        assert cert.g_alpha.is_unit()
        assert compare_divisors(jacobian(sigma), cert.theta).equal


@pytest.mark.parametrize("factor", ["2", "-1", "1/3"])
def test_scaling_keeps_the_verdict(qq3, eg3_quartic, eg3_nu, factor):
    """Test that scaling f changes neither the verdict nor the splitting degrees."""
    c = eg3_quartic.ring.parse(factor)
    free = check_divisor_free(c * eg3_quartic, eg3_nu)
    assert free.verdict is Verdict.FREE
    assert free.splitting_degrees == (1, 1, 1)

    f = qq3.parse("x0^3 + x1^3 + x2^3")
    fermat = check_divisor_free(qq3.parse(factor) * f, PolyMatrix.from_strings(qq3, FERMAT_NU))
    assert fermat.verdict is Verdict.NOT_CERTIFIED
    assert fermat.splitting_degrees == (2, 2)


def test_scaling_a_sequence_keeps_the_verdict(eg3_d4_sigma, eg3_d4_nu):
    """Test that rescaling each polynomial of the d=4 pair keeps Free and (1, 1, 1)."""
    f, g = eg3_d4_sigma.polys
    scaled = SequenceSpec((2 * f, g * f.ring.parse("-1/3")))
    cert = check_sequence(scaled, eg3_d4_nu)

    assert cert.verdict is Verdict.FREE
    assert cert.splitting_degrees == (1, 1, 1)
