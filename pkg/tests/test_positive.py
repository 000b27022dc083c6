"""Tests for the positive-characteristic splitting."""

import json
import random
from itertools import combinations_with_replacement

import pytest

from certificates.verify import verify_certificate
from errors import CharZero, DegreeNotDivisible, JacobianRankDeficient, LengthMismatch
from polys import Poly
from saito import positive_char_split
from sequences import SequenceSpec

from tests.conftest import make_ring, random_homogeneous


def split_for(text, p, nvars=3):
    ring = make_ring(nvars, p=p)
    return positive_char_split(SequenceSpec((ring.parse(text),)))


def test_triangle_over_gf3():
    """Test that x0*x1*x2 over GF(3) splits as O(-1) + O(-1)."""
    cert = split_for("x0*x1*x2", 3)

    assert cert.d == 1
    assert cert.printed_d == 3
    assert cert.gcd_degree == 0
    assert cert.oracle_degrees == (1, 1)
    assert not cert.formula_agrees
    assert cert.certified
    assert cert.euler_annihilated
    assert cert.annihilation_holds()


def test_conic_over_gf2():
    """Test that x0^2 + x1*x2 over GF(2) has syzygies of degrees 0 and 1."""
    cert = split_for("x0^2 + x1*x2", 2)

    assert cert.d == 0
    assert cert.printed_d == 2
    assert cert.oracle_degrees == (0, 1)
    assert cert.certified
    assert cert.generate()["verdict"] == "Free"


def test_split_preconditions():
    """Test each refusal of the positive-characteristic check."""
    with pytest.raises(CharZero):
        split_for("x0*x1*x2", 0)
    with pytest.raises(LengthMismatch):
        split_for("x0*x1*x2", 3, nvars=4)
    with pytest.raises(DegreeNotDivisible):
        split_for("x0*x1", 3)
    with pytest.raises(JacobianRankDeficient):
        split_for("x0^3 + x1^3", 3)


def test_random_curves_match_chern_bookkeeping():
    """Test on seeded random plane curves that two syzygies have degrees summing to 1 + d."""
    rng = random.Random(31337)
    split_cases = 0
    for _ in range(12):
        p = rng.choice([2, 3])
        ring = make_ring(3, p=p)
        monomials = [
            tuple(combo.count(j) for j in range(3))
            for combo in combinations_with_replacement(range(3), p)
        ]
        f = Poly(ring, {m: rng.randrange(p) for m in monomials})
        if f.is_zero():
            continue
        try:
            cert = positive_char_split(SequenceSpec((f,)))
        except JacobianRankDeficient:
            continue
        assert cert.annihilation_holds()
        if len(cert.oracle_degrees) == 2:
            split_cases += 1
            assert sum(cert.oracle_degrees) == 1 + cert.d
    assert split_cases > 0


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("n", [2, 3])
def test_random_sequences_split_and_verify(p, n):
    """Test seeded sparse sequences of degree p on P^n: certificates verify and two syzygies sum to 1 + d."""
    rng = random.Random(1000 * p + n)
    ring = make_ring(n + 1, p=p)
    valid = 0
    for _ in range(40):
        if valid == 12:
            break
        polys = tuple(random_homogeneous(ring, rng, p, terms=3) for _ in range(n - 1))
        if any(f.is_zero() for f in polys):
            continue
        try:
            cert = positive_char_split(SequenceSpec(polys))
        except JacobianRankDeficient:
            continue
        valid += 1
        assert cert.annihilation_holds()
        assert verify_certificate(json.loads(cert.to_json())).ok
        if len(cert.oracle_degrees) == 2:
            assert sum(cert.oracle_degrees) == 1 + cert.d
    assert valid >= 10
