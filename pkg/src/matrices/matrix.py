"""Matrices of polynomials with optional grading metadata.

When ``row_degrees`` and ``column_degrees`` are set, entry (i, j) is zero or
homogeneous of degree ``row_degrees[i] + column_degrees[j]``.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from errors import DimensionMismatch, NonHomogeneousInput
from polys import Poly, Ring, homogeneity, parse_poly
from polys.poly import check_compatible

logger = logging.getLogger(__name__)

Grading = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class PolyMatrix:
    ring: Ring
    entries: tuple[tuple[Poly, ...], ...]
    ncols: int
    row_degrees: Optional[tuple[int, ...]] = None
    column_degrees: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        for i, row in enumerate(rows):
            if len(row) != self.ncols:
                raise DimensionMismatch(
                    f"row {i} has {len(row)} entries, expected {self.ncols}", location=i
                )
            for entry in row:
                if not self.ring.compatible(entry.ring):
                    check_compatible(Poly(self.ring), entry)
        if self.row_degrees is not None:
            object.__setattr__(self, "row_degrees", tuple(self.row_degrees))
            if len(self.row_degrees) != self.nrows:
                raise DimensionMismatch("row degree list does not match the row count")
        if self.column_degrees is not None:
            object.__setattr__(self, "column_degrees", tuple(self.column_degrees))
            if len(self.column_degrees) != self.ncols:
                raise DimensionMismatch("column degree list does not match the column count")
        if self.row_degrees is not None and self.column_degrees is not None:
            self._check_grading(self.row_degrees, self.column_degrees)

    def _check_grading(self, row_degrees: Sequence[int], column_degrees: Sequence[int]) -> None:
        for i, row in enumerate(self.entries):
            for j, entry in enumerate(row):
                if entry.is_zero():
                    continue
                is_homogeneous, degree = homogeneity(entry)
                if not is_homogeneous or degree != row_degrees[i] + column_degrees[j]:
                    raise NonHomogeneousInput(
                        f"entry ({i}, {j}) = {entry} is not homogeneous of degree "
                        f"{row_degrees[i] + column_degrees[j]}",
                        location=[i, j],
                    )

    # -- construction

    @classmethod
    def from_rows(
        cls,
        ring: Ring,
        rows: Iterable[Sequence[Poly]],
        row_degrees: Optional[Sequence[int]] = None,
        column_degrees: Optional[Sequence[int]] = None,
        ncols: Optional[int] = None,
    ) -> "PolyMatrix":
        rows = tuple(tuple(row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(
            ring,
            rows,
            ncols,
            None if row_degrees is None else tuple(row_degrees),
            None if column_degrees is None else tuple(column_degrees),
        )

    @classmethod
    def from_columns(cls, ring: Ring, columns: Sequence[Sequence[Poly]], nrows: int) -> "PolyMatrix":
        rows = [[column[i] for column in columns] for i in range(nrows)]
        return cls.from_rows(ring, rows, ncols=len(columns))

    @classmethod
    def from_strings(cls, ring: Ring, rows: Sequence[Sequence[str]]) -> "PolyMatrix":
        parsed = [
            [parse_poly(text, ring.variables, ring.field, ring.order) for text in row]
            for row in rows
        ]
        return cls.from_rows(ring, parsed)

    @classmethod
    def identity(cls, ring: Ring, size: int) -> "PolyMatrix":
        rows = [
            [ring.one() if i == j else ring.zero() for j in range(size)] for i in range(size)
        ]
        return cls.from_rows(ring, rows, [0] * size, [0] * size, ncols=size)

    @classmethod
    def zeros(cls, ring: Ring, nrows: int, ncols: int) -> "PolyMatrix":
        return cls.from_rows(ring, [[ring.zero()] * ncols for _ in range(nrows)], ncols=ncols)

    # -- shape and access

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, index: tuple[int, int]) -> Poly:
        i, j = index
        return self.entries[i][j]

    def column(self, j: int) -> tuple[Poly, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple[Poly, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def is_zero(self) -> bool:
        return all(entry.is_zero() for row in self.entries for entry in row)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix.from_rows(
            self.ring,
            [self.column(j) for j in range(self.ncols)],
            self.column_degrees,
            self.row_degrees,
            ncols=self.nrows,
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix.from_rows(
            self.ring,
            [[self.entries[i][j] for j in cols] for i in rows],
            None if self.row_degrees is None else [self.row_degrees[i] for i in rows],
            None if self.column_degrees is None else [self.column_degrees[j] for j in cols],
            ncols=len(cols),
        )

    def select_columns(self, cols: Sequence[int]) -> "PolyMatrix":
        return self.submatrix(range(self.nrows), cols)

    # -- grading

    def infer_grading(self, row_degrees: Optional[Sequence[int]] = None) -> Grading:
        """Solve r_i + c_j = deg(a_ij) over the nonzero entries.

        Each connected block of the row/column incidence graph gets its first
        row pinned to degree 0 unless ``row_degrees`` fixes all rows. Empty
        rows and columns get degree 0.
        """
        if row_degrees is None and self.row_degrees is not None and self.column_degrees is not None:
            return self.row_degrees, self.column_degrees
        for i, row in enumerate(self.entries):
            for j, entry in enumerate(row):
                if entry and not homogeneity(entry).is_homogeneous:
                    raise NonHomogeneousInput(f"entry ({i}, {j}) = {entry} is not homogeneous", location=[i, j])

        rows: list[Optional[int]] = (
            [None] * self.nrows if row_degrees is None else list(row_degrees)
        )
        cols: list[Optional[int]] = [None] * self.ncols
        degree = {
            (i, j): int(entry.total_degree())
            for i, row in enumerate(self.entries)
            for j, entry in enumerate(row)
            if entry
        }

        def visit(queue: deque) -> None:
            while queue:
                side, index = queue.popleft()
                if side == "row":
                    for j in range(self.ncols):
                        if (index, j) not in degree:
                            continue
                        value = degree[(index, j)] - rows[index]  # type: ignore[operator]
                        if cols[j] is None:
                            cols[j] = value
                            queue.append(("col", j))
                        elif cols[j] != value:
                            raise NonHomogeneousInput(
                                f"no grading fits entry ({index}, {j})", location=[index, j]
                            )
                else:
                    for i in range(self.nrows):
                        if (i, index) not in degree:
                            continue
                        value = degree[(i, index)] - cols[index]  # type: ignore[operator]
                        if rows[i] is None:
                            rows[i] = value
                            queue.append(("row", i))
                        elif rows[i] != value:
                            raise NonHomogeneousInput(
                                f"no grading fits entry ({i}, {index})", location=[i, index]
                            )

        if row_degrees is not None:
            visit(deque(("row", i) for i in range(self.nrows)))
        else:
            for i in range(self.nrows):
                if rows[i] is None:
                    rows[i] = 0
                    visit(deque([("row", i)]))
        return (
            tuple(0 if r is None else r for r in rows),
            tuple(0 if c is None else c for c in cols),
        )

    def graded(self, row_degrees: Optional[Sequence[int]] = None) -> "PolyMatrix":
        rows, cols = self.infer_grading(row_degrees)
        return PolyMatrix(self.ring, self.entries, self.ncols, rows, cols)

    # -- serialization

    def to_json(self) -> list[list[str]]:
        return [[str(entry) for entry in row] for row in self.entries]

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(row) + "]" for row in self.to_json())


def hstack(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.nrows != b.nrows:
        raise DimensionMismatch(f"cannot place {b.shape} beside {a.shape}")
    check_compatible(Poly(a.ring), Poly(b.ring))
    column_degrees = None
    if (
        a.column_degrees is not None
        and b.column_degrees is not None
        and a.row_degrees is not None
        and a.row_degrees == b.row_degrees
    ):
        column_degrees = a.column_degrees + b.column_degrees
    return PolyMatrix.from_rows(
        a.ring,
        [ra + rb for ra, rb in zip(a.entries, b.entries)],
        a.row_degrees if column_degrees is not None else None,
        column_degrees,
        ncols=a.ncols + b.ncols,
    )


def mat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.ncols != b.nrows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    check_compatible(Poly(a.ring), Poly(b.ring))
    rows = []
    for i in range(a.nrows):
        row = []
        for j in range(b.ncols):
            total = a.ring.zero()
            for k in range(a.ncols):
                left, right = a.entries[i][k], b.entries[k][j]
                if left and right:
                    total = total + left * right
            row.append(total)
        rows.append(row)
    return PolyMatrix.from_rows(a.ring, rows, ncols=b.ncols)
