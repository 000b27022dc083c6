"""Maximal minors, generic rank and the divisor of a map.

Minors are enumerated lexicographically on (row subset, column subset) so
downstream certificates are byte-stable.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from errors import RankTooLarge, ZeroMatrix
from polys import Poly, gcd_multivariate

from .determinant import DeterminantMethod, determinant
from .matrix import PolyMatrix, mat_mul

logger = logging.getLogger(__name__)


def _iter_minors(m: PolyMatrix, r: int, method: DeterminantMethod) -> Iterator[Poly]:
    for rows in combinations(range(m.nrows), r):
        for cols in combinations(range(m.ncols), r):
            yield determinant(m.submatrix(rows, cols), method)


def maximal_minors(
    m: PolyMatrix,
    r: Optional[int] = None,
    method: DeterminantMethod = DeterminantMethod.BAREISS,
) -> list[Poly]:
    limit = min(m.nrows, m.ncols)
    if r is None:
        r = limit
    if r > limit or r < 0:
        raise RankTooLarge(f"no {r}x{r} minors in a {m.nrows}x{m.ncols} matrix")
    return list(_iter_minors(m, r, method))


def generic_rank(m: PolyMatrix, method: DeterminantMethod = DeterminantMethod.BAREISS) -> int:
    """Rank over the fraction field: the largest size with a nonzero minor."""
    for r in range(min(m.nrows, m.ncols), 0, -1):
        if any(not minor.is_zero() for minor in _iter_minors(m, r, method)):
            return r
    return 0


@dataclass(frozen=True)
class DivisorClass:
    equation: Poly
    degree: int
    rank: int
    full_rank: bool

    def to_json(self) -> dict:
        return {
            "equation": str(self.equation),
            "degree": self.degree,
            "rank": self.rank,
            "full_rank": self.full_rank,
        }


def divisor_of_map(
    m: PolyMatrix, method: DeterminantMethod = DeterminantMethod.BAREISS
) -> DivisorClass:
    """V(gcd of the r x r minors), r the generic rank of ``m``."""
    rank = generic_rank(m, method)
    if rank == 0:
        raise ZeroMatrix(f"the {m.nrows}x{m.ncols} map is zero")
    equation = gcd_multivariate(maximal_minors(m, rank, method))
    full_rank = rank == min(m.nrows, m.ncols)
    if not full_rank:
        logger.debug("divisor of a rank-deficient map uses %dx%d minors", rank, rank)
    return DivisorClass(equation, int(equation.total_degree()), rank, full_rank)


@dataclass(frozen=True)
class DivisorComparison:
    dv_alpha: DivisorClass
    dv_theta: DivisorClass
    dv_composite: DivisorClass

    @property
    def equal(self) -> bool:
        """Whether dv(theta) and dv(alpha * theta) agree as monic equations."""
        return self.dv_theta.equation == self.dv_composite.equation

    def to_json(self) -> dict:
        return {
            "dv_alpha": self.dv_alpha.to_json(),
            "dv_theta": self.dv_theta.to_json(),
            "dv_composite": self.dv_composite.to_json(),
            "equal": self.equal,
        }


def compare_divisors(
    alpha: PolyMatrix,
    theta: PolyMatrix,
    method: DeterminantMethod = DeterminantMethod.BAREISS,
) -> DivisorComparison:
    return DivisorComparison(
        divisor_of_map(alpha, method),
        divisor_of_map(theta, method),
        divisor_of_map(mat_mul(alpha, theta), method),
    )
