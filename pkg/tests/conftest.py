import random
import sys
from pathlib import Path

import pytest

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

# Also add the src directory
src_path = project_root / "src"
sys.path.insert(0, str(src_path))

from matrices import PolyMatrix  # noqa: E402
from polys import FieldSpec, Poly, Ring  # noqa: E402
from sequences import SequenceSpec  # noqa: E402

EG3_D3_QUARTIC = "3*x0^2*x1^2 - 4*x0^3*x2 - 4*x1^3*x3 + 6*x0*x1*x2*x3 - x2^2*x3^2"
EG3_D3_PRINTED = "x0^2*x1^2 - 4*x0^3*x2 - 4*x1^3*x3 + 6*x0*x1*x2*x3 - x2^2*x3^2"
EG3_D3_NU = [
    ["x3", "x0", "2*x1"],
    ["2*x0", "-x1", "x2"],
    ["3*x1", "-3*x2", "0"],
    ["0", "3*x3", "3*x0"],
]
EG3_D4_SEQUENCE = [
    "x2^2 - 2*x1*x3 + 2*x0*x4",
    "2*x2^3 - 6*x1*x2*x3 + 9*x0*x3^2 + 6*x1^2*x4 - 12*x0*x2*x4",
]
EG3_D4_NU = [
    ["2*x1", "2*x0", "0"],
    ["3*x2", "x1", "x0"],
    ["3*x3", "0", "x1"],
    ["2*x4", "-x3", "x2"],
    ["0", "-2*x4", "x3"],
]


def make_ring(nvars: int, p: int = 0) -> Ring:
    field = FieldSpec.prime(p) if p else FieldSpec.rationals()
    return Ring(field, tuple(f"x{i}" for i in range(nvars)))


def random_poly(ring: Ring, rng: random.Random, terms: int = 4, degree: int = 3) -> Poly:
    monomials = {}
    for _ in range(terms):
        exponents = [0] * ring.nvars
        for _ in range(rng.randint(0, degree)):
            exponents[rng.randrange(ring.nvars)] += 1
        monomials[tuple(exponents)] = rng.randint(-5, 5)
    return Poly(ring, monomials)


def random_homogeneous(ring: Ring, rng: random.Random, degree: int, terms: int = 3) -> Poly:
    """Homogeneous of the given degree with nonzero integer coefficients; may cancel to 0 mod p."""
    monomials = {}
    for _ in range(terms):
        exponents = [0] * ring.nvars
        for _ in range(degree):
            exponents[rng.randrange(ring.nvars)] += 1
        monomials[tuple(exponents)] = rng.choice([-3, -2, -1, 1, 2, 3])
    return Poly(ring, monomials)


@pytest.fixture
def qq3():
    return make_ring(3)


@pytest.fixture
def qq4():
    return make_ring(4)


@pytest.fixture
def qq5():
    return make_ring(5)


@pytest.fixture
def gf3():
    return make_ring(3, p=3)


@pytest.fixture
def eg3_quartic(qq4):
    """Corrected tangent-developable quartic in P^3."""
    return qq4.parse(EG3_D3_QUARTIC)


@pytest.fixture
def eg3_nu(qq4):
    return PolyMatrix.from_strings(qq4, EG3_D3_NU)


@pytest.fixture
def eg3_d4_sigma(qq5):
    return SequenceSpec(tuple(qq5.parse(text) for text in EG3_D4_SEQUENCE))


@pytest.fixture
def eg3_d4_nu(qq5):
    return PolyMatrix.from_strings(qq5, EG3_D4_NU)


@pytest.fixture
def counterexample(qq3):
    """Jacobian-like alpha and theta with dv(theta) = dv(alpha theta) = V(x0)."""
    alpha = PolyMatrix.from_strings(qq3, [["x1", "x0", "0"], ["x2", "0", "x0"]])
    theta = PolyMatrix.from_strings(qq3, [["x0", "x0"], ["-x1", "x1"], ["-x2", "x2"]])
    return alpha, theta
