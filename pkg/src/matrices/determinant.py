import logging
from enum import Enum
from functools import lru_cache

from errors import NotSquare
from polys import Poly, exact_divide

from .matrix import PolyMatrix

logger = logging.getLogger(__name__)


class DeterminantMethod(str, Enum):
    BAREISS = "bareiss"
    COFACTOR = "cofactor"


def _bareiss(m: PolyMatrix) -> Poly:
    """Fraction-free elimination; every division is exact."""
    size = m.nrows
    ring = m.ring
    if size == 0:
        return ring.one()
    a = [list(row) for row in m.entries]
    negate = False
    previous = ring.one()
    for k in range(size - 1):
        if a[k][k].is_zero():
            pivot = next((i for i in range(k + 1, size) if a[i][k]), None)
            if pivot is None:
                return ring.zero()
            a[k], a[pivot] = a[pivot], a[k]
            negate = not negate
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = exact_divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], previous)
        previous = a[k][k]
    result = a[size - 1][size - 1]
    return -result if negate else result


def _cofactor(m: PolyMatrix) -> Poly:
    """Laplace expansion along rows, memoized on the remaining column set."""
    size = m.nrows
    ring = m.ring
    entries = m.entries

    @lru_cache(maxsize=None)
    def minor(row: int, cols: tuple[int, ...]) -> Poly:
        if row == size:
            return ring.one()
        total = ring.zero()
        for position, col in enumerate(cols):
            entry = entries[row][col]
            if entry.is_zero():
                continue
            rest = minor(row + 1, cols[:position] + cols[position + 1 :])
            if rest.is_zero():
                continue
            term = entry * rest
            total = total - term if position % 2 else total + term
        return total

    return minor(0, tuple(range(size)))


def determinant(m: PolyMatrix, method: DeterminantMethod = DeterminantMethod.BAREISS) -> Poly:
    if m.nrows != m.ncols:
        raise NotSquare(f"determinant of a {m.nrows}x{m.ncols} matrix")
    if method is DeterminantMethod.COFACTOR:
        result = _cofactor(m)
    else:
        result = _bareiss(m)
    return Poly(m.ring, result.term_map())
