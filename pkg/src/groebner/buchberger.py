"""Buchberger's algorithm for ideals and submodules of free modules.

Pairs are taken by the normal strategy: lowest graded degree of the lcm
first, ties broken by creation order. The product criterion (ideals only) and
the chain criterion prune pairs.
"""

import heapq
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Union

from errors import GroebnerLimitExceeded, OrderMismatch, VariableListMismatch
from polys import MonomialOrder, Poly, Ring
from polys.poly import check_compatible, divides

from .module import Vector, pot_key, reduce_vector, s_vector

logger = logging.getLogger(__name__)

Element = Union[Poly, Sequence[Poly]]

DEFAULT_PAIR_LIMIT = 20000


@dataclass(frozen=True)
class GroebnerBasis:
    ring: Ring
    module_rank: int
    vectors: tuple[Vector, ...]
    reduced: bool
    truncated: bool = False
    degree_bound: Optional[int] = None

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    @property
    def generators(self) -> list[Union[Poly, tuple[Poly, ...]]]:
        if self.module_rank == 1:
            return [v.to_polys()[0] for v in self.vectors]
        return [v.to_polys() for v in self.vectors]

    def __len__(self) -> int:
        return len(self.vectors)

    def reduce(self, element: Element) -> Vector:
        vector = _as_vector(self.ring, element, self.module_rank, check_order=True)
        return reduce_vector(vector, self.vectors)

    def contains(self, element: Element) -> bool:
        return self.reduce(element).is_zero()

    def is_groebner(self) -> bool:
        """Every S-pair reduces to zero modulo the basis."""
        for f, g in combinations(self.vectors, 2):
            s = s_vector(f, g)
            if s is not None and not reduce_vector(s, self.vectors).is_zero():
                return False
        return True

    def to_json(self) -> list:
        if self.module_rank == 1:
            return [str(p) for p in self.generators]
        return [[str(p) for p in v] for v in self.generators]  # type: ignore[union-attr]


def _as_vector(ring: Ring, element: Element, rank: int, *, check_order: bool = False) -> Vector:
    polys = [element] if isinstance(element, Poly) else list(element)
    if len(polys) != rank:
        raise VariableListMismatch(f"expected a vector of length {rank}, got {len(polys)}")
    for p in polys:
        check_compatible(Poly(ring), p)
        if check_order and p.ring.order != ring.order:
            raise OrderMismatch(f"{p} uses {p.ring.order}, the basis uses {ring.order}")
    return Vector.from_polys(ring, polys)


def normal_form(element: Element, gb: GroebnerBasis) -> Union[Poly, tuple[Poly, ...]]:
    """Unique remainder of ``element`` modulo ``gb``; zero iff it is a member."""
    remainder = gb.reduce(element).to_polys()
    return remainder[0] if isinstance(element, Poly) else remainder


def s_polynomial(f: Poly, g: Poly) -> Poly:
    check_compatible(f, g)
    s = s_vector(Vector.from_polys(f.ring, [f]), Vector.from_polys(f.ring, [g]))
    return s.to_polys()[0]  # type: ignore[union-attr]


def _lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def _minimalize(vectors: list[Vector]) -> list[Vector]:
    kept: list[Vector] = []
    for index, v in enumerate(vectors):
        position, monomial = v.lead()
        redundant = False
        for other_index, w in enumerate(vectors):
            if other_index == index:
                continue
            w_position, w_monomial = w.lead()
            if w_position != position or not divides(w_monomial, monomial):
                continue
            if w_monomial != monomial or other_index < index:
                redundant = True
                break
        if not redundant:
            kept.append(v)
    return kept


def _interreduce(vectors: list[Vector]) -> list[Vector]:
    current = list(vectors)
    for index in range(len(current)):
        others = current[:index] + current[index + 1 :]
        current[index] = reduce_vector(current[index], others).monic()
    return current


def buchberger(
    gens: Sequence[Element],
    order: Optional[MonomialOrder] = None,
    *,
    reduce: bool = True,
    pair_limit: int = DEFAULT_PAIR_LIMIT,
    degree_bound: Optional[int] = None,
    shifts: Optional[Sequence[int]] = None,
) -> GroebnerBasis:
    """Groebner basis of the ideal or module generated by ``gens``.

    ``gens`` holds polynomials (an ideal) or equal-length tuples of
    polynomials (a submodule). With ``degree_bound`` the computation is
    truncated: pairs of graded degree above the bound are skipped and the
    basis is flagged. ``shifts`` gives the degree of each module position.
    """
    if not gens:
        raise ValueError("buchberger needs at least one generator")
    first = gens[0] if isinstance(gens[0], Poly) else gens[0][0]
    ring = first.ring if order is None else first.ring.with_order(order)
    rank = 1 if isinstance(gens[0], Poly) else len(gens[0])
    shifts = tuple(shifts) if shifts is not None else (0,) * rank
    key = pot_key(ring.order)

    basis: list[Vector] = []
    pairs: list[tuple[int, int, int, int]] = []
    pending: set[tuple[int, int]] = set()
    serial = 0
    truncated = False

    def add(vector: Vector) -> None:
        nonlocal serial
        new = len(basis)
        basis.append(vector)
        position, monomial = vector.lead()
        for old, other in enumerate(basis[:-1]):
            other_position, other_monomial = other.lead()
            if other_position != position:
                continue
            lcm = _lcm(monomial, other_monomial)
            degree = sum(lcm) + shifts[position]
            heapq.heappush(pairs, (degree, serial, old, new))
            pending.add((old, new))
            serial += 1

    for element in gens:
        vector = _as_vector(ring, element, rank)
        if not vector.is_zero():
            add(vector.monic())

    processed = 0
    while pairs:
        degree, _, i, j = heapq.heappop(pairs)
        pending.discard((i, j))
        if degree_bound is not None and degree > degree_bound:
            truncated = True
            continue
        f, g = basis[i], basis[j]
        f_position, f_monomial = f.lead()
        g_monomial = g.lead()[1]
        lcm = _lcm(f_monomial, g_monomial)
        if rank == 1 and all(a == 0 or b == 0 for a, b in zip(f_monomial, g_monomial)):
            continue
        if _chain_criterion(basis, pending, i, j, f_position, lcm):
            continue
        processed += 1
        if processed > pair_limit:
            raise GroebnerLimitExceeded(
                f"more than {pair_limit} S-pairs without termination", location=pair_limit
            )
        s = s_vector(f, g)
        if s is None:
            continue
        remainder = reduce_vector(s, basis)
        if not remainder.is_zero():
            add(remainder.monic())

    logger.debug(
        "buchberger: %d elements, %d pairs reduced, truncated=%s", len(basis), processed, truncated
    )
    result = basis
    if reduce:
        result = _interreduce(_minimalize(basis))
    result.sort(key=lambda v: key(v.lead()), reverse=True)
    return GroebnerBasis(ring, rank, tuple(result), reduce, truncated, degree_bound)


def _chain_criterion(
    basis: list[Vector],
    pending: set[tuple[int, int]],
    i: int,
    j: int,
    position: int,
    lcm: tuple[int, ...],
) -> bool:
    for k, vector in enumerate(basis):
        if k in (i, j):
            continue
        k_position, k_monomial = vector.lead()
        if k_position != position or not divides(k_monomial, lcm):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False
