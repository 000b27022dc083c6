"""Syzygies {v : A v = 0} of a graded polynomial matrix.

The columns of A are lifted to (A e_j ; e_j) in R^(k+m) and a Groebner basis
is computed position-over-term with the A positions on top. Basis elements
whose leading position lies in the identity block have a vanishing A part;
their lower halves generate the syzygy module.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from matrices import PolyMatrix
from polys import Poly

from .buchberger import DEFAULT_PAIR_LIMIT, buchberger

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SyzygyBasis:
    source: PolyMatrix
    columns: tuple[tuple[Poly, ...], ...]
    degrees: tuple[int, ...]
    truncated: bool = False
    degree_bound: Optional[int] = None

    def as_matrix(self) -> PolyMatrix:
        """Syzygies as the columns of an m x s matrix."""
        _, column_degrees = self.source.infer_grading()
        return PolyMatrix.from_rows(
            self.source.ring,
            [[column[i] for column in self.columns] for i in range(self.source.ncols)],
            [-c for c in column_degrees],
            self.degrees,
            ncols=len(self.columns),
        )

    def to_json(self) -> dict:
        return {
            "columns": [[str(p) for p in column] for column in self.columns],
            "degrees": list(self.degrees),
            "truncated": self.truncated,
            "degree_bound": self.degree_bound,
        }


def _column_degree(column: tuple[Poly, ...], column_degrees: tuple[int, ...]) -> int:
    for entry, shift in zip(column, column_degrees):
        if entry:
            return int(entry.total_degree()) + shift
    return 0


def syzygy_basis(
    a: PolyMatrix,
    degree_bound: Optional[int] = None,
    *,
    minimal: bool = True,
    pair_limit: int = DEFAULT_PAIR_LIMIT,
) -> SyzygyBasis:
    """Generators of the syzygy module of the columns of ``a``.

    With ``degree_bound`` only syzygies of degree at most the bound are
    produced and the result is flagged truncated. With ``minimal`` the
    generators are pruned degree by degree to a minimal generating set.
    """
    row_degrees, column_degrees = a.infer_grading()
    ring = a.ring
    k, m = a.nrows, a.ncols
    zero = ring.zero()
    lifted = []
    for j in range(m):
        unit = [ring.one() if l == j else zero for l in range(m)]
        lifted.append(list(a.column(j)) + unit)
    shifts = [-r for r in row_degrees] + list(column_degrees)
    gb = buchberger(
        lifted,
        reduce=True,
        pair_limit=pair_limit,
        degree_bound=degree_bound,
        shifts=shifts,
    )
    found = []
    for vector in gb.vectors:
        position, _ = vector.lead()
        if position < k:
            continue
        column = vector.to_polys()[k:]
        found.append((_column_degree(column, column_degrees), column))
    if degree_bound is not None:
        found = [item for item in found if item[0] <= degree_bound]
    found.sort(key=lambda item: item[0])
    if minimal:
        found = _minimalize(found, column_degrees, pair_limit)
    logger.debug(
        "syzygy_basis: %d generators of degrees %s", len(found), [d for d, _ in found]
    )
    return SyzygyBasis(
        a,
        tuple(tuple(column) for _, column in found),
        tuple(d for d, _ in found),
        gb.truncated,
        degree_bound,
    )


def _minimalize(
    found: list[tuple[int, tuple[Poly, ...]]],
    column_degrees: tuple[int, ...],
    pair_limit: int,
) -> list[tuple[int, tuple[Poly, ...]]]:
    kept: list[tuple[int, tuple[Poly, ...]]] = []
    for degree, column in found:
        if kept:
            span = buchberger(
                [c for _, c in kept],
                reduce=False,
                pair_limit=pair_limit,
                degree_bound=degree,
                shifts=column_degrees,
            )
            if span.contains(column):
                continue
        kept.append((degree, column))
    return kept
