from polys.poly import partial_derivative
from sequences import SequenceSpec

from .matrix import PolyMatrix


def jacobian(sigma: SequenceSpec) -> PolyMatrix:
    """k x (n+1) matrix of partials, graded with row degrees deg(f_i) - 1."""
    ring = sigma.ring
    rows = [[partial_derivative(f, j) for j in range(ring.nvars)] for f in sigma.polys]
    return PolyMatrix.from_rows(
        ring, rows, sigma.twist_degrees, [0] * ring.nvars, ncols=ring.nvars
    )
