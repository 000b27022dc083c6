"""Tests for block-diagonal sequences."""

import random

import pytest

from certificates import Verdict
from errors import InvalidSequence, NoCandidate, OverlappingBlocks
from matrices import compare_divisors, jacobian
from polys import FieldSpec, Poly, Ring, exact_divide
from saito import Block, block_sequence, check_sequence

from tests.conftest import make_ring


@pytest.fixture
def eg1_ring():
    return Ring(FieldSpec.rationals(), ("x00", "x01", "x10", "x11"))


def test_two_quadric_blocks(eg1_ring):
    """Test two blocks x00*x01 and x10*x11 with their own Euler columns."""
    blocks = [
        Block(("x00", "x01"), (eg1_ring.parse("x00*x01"),)),
        Block(("x10", "x11"), (eg1_ring.parse("x10*x11"),)),
    ]
    assembled = block_sequence(blocks)

    assert assembled.nu.to_json() == [["x00", "0"], ["-x01", "0"], ["0", "x10"], ["0", "-x11"]]
    assert assembled.gamma.partition == (("x00", "x01"), ("x10", "x11"))

    cert = check_sequence(assembled.sigma, assembled.nu, assembled.gamma)
    assert cert.verdict is Verdict.FREE
    assert cert.h == 1
    assert str(cert.det_theta) == "-4*x00*x01*x10*x11"
    f0, f1 = assembled.sigma.polys
    assert cert.det_theta_blocks == 4 * f0 * f1
    assert cert.splitting_degrees == (1, 1)
    assert cert.twists == (-1, -1)
    assert cert.gamma == {"block-euler": [["x00", "x01"], ["x10", "x11"]]}


def test_three_and_two_variable_blocks(qq5):
    """Test a triangle block beside a quadric block, searching the larger one."""
    blocks = [
        Block(("x0", "x1", "x2"), (qq5.parse("x0*x1*x2"),)),
        Block(("x3", "x4"), (qq5.parse("x3*x4"),)),
    ]
    assembled = block_sequence(blocks)
    cert = check_sequence(assembled.sigma, assembled.nu, assembled.gamma)

    assert cert.verdict is Verdict.FREE
    assert cert.splitting_degrees == (1, 1, 1)


def test_block_polynomial_must_stay_in_block(eg1_ring):
    """Test that a polynomial using another block's variables is rejected."""
    blocks = [
        Block(("x00", "x01"), (eg1_ring.parse("x00*x10"),)),
        Block(("x10", "x11"), (eg1_ring.parse("x10*x11"),)),
    ]
    with pytest.raises(InvalidSequence):
        block_sequence(blocks)


def test_blocks_must_not_overlap(eg1_ring):
    """Test that a variable shared by two blocks is rejected."""
    blocks = [
        Block(("x00", "x01"), (eg1_ring.parse("x00*x01"),)),
        Block(("x01", "x10", "x11"), (eg1_ring.parse("x10*x11"),)),
    ]
    with pytest.raises(OverlappingBlocks):
        block_sequence(blocks)


def test_block_without_candidate():
    """Test that a Fermat cubic block has no syzygy matrix to offer."""
    ring = make_ring(3)
    with pytest.raises(NoCandidate):
        block_sequence([Block(("x0", "x1", "x2"), (ring.parse("x0^3 + x1^3 + x2^3"),))])


def random_binary_quadric(ring, rng, u, v):
    """a u^2 + b uv + c v^2 with nonzero discriminant, hence square-free."""
    while True:
        a, b, c = (rng.randint(-4, 4) for _ in range(3))
        if b * b - 4 * a * c != 0:
            break
    terms = {}
    for coeff, (eu, ev) in zip((a, b, c), ((2, 0), (1, 1), (0, 2))):
        exponents = [0] * ring.nvars
        exponents[u], exponents[v] = eu, ev
        terms[tuple(exponents)] = coeff
    return Poly(ring, terms)


def test_three_random_quadric_blocks():
    """Test that three square-free binary quadrics on disjoint pairs are always certified free."""
    rng = random.Random(1701)
    ring = make_ring(6)
    pairs = [("x0", "x1"), ("x2", "x3"), ("x4", "x5")]
    for _ in range(20):
        quadrics = [random_binary_quadric(ring, rng, 2 * b, 2 * b + 1) for b in range(3)]
        assembled = block_sequence([Block(pair, (q,)) for pair, q in zip(pairs, quadrics)])
        cert = check_sequence(assembled.sigma, assembled.nu, assembled.gamma)

        assert cert.verdict is Verdict.FREE
        assert cert.splitting_degrees == (1, 1, 1)
        scale = exact_divide(cert.det_theta_blocks, quadrics[0] * quadrics[1] * quadrics[2])
        assert scale.is_constant() and not scale.is_zero()
        assert cert.det_theta == -cert.det_theta_blocks
        assert compare_divisors(jacobian(assembled.sigma), cert.theta).equal
