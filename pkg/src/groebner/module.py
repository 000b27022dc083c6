"""Elements of a free module R^r, stored as {(position, monomial): coefficient}.

Ideals are the rank-one case. Terms compare position-over-term: a smaller
position index wins, then the ring's monomial order decides.
"""

from typing import Any, Callable, Iterable, Optional, Sequence, Union

from polys import MonomialOrder, Poly, Ring
from polys.poly import divides

Key = tuple[int, tuple[int, ...]]


def pot_key(order: MonomialOrder) -> Callable[[Key], tuple]:
    monomial_key = order.key

    def key(term: Key) -> tuple:
        return (-term[0], monomial_key(term[1]))

    return key


class Vector:
    __slots__ = ("ring", "rank", "terms", "_lead")

    def __init__(self, ring: Ring, rank: int, terms: dict[Key, Any]) -> None:
        self.ring = ring
        self.rank = rank
        self.terms = terms
        self._lead: Optional[Key] = None

    @classmethod
    def from_polys(cls, ring: Ring, polys: Sequence[Poly]) -> "Vector":
        terms = {}
        for position, p in enumerate(polys):
            for monomial, coeff in p.term_map().items():
                terms[(position, monomial)] = coeff
        return cls(ring, len(polys), terms)

    @classmethod
    def coerce(cls, ring: Ring, element: Union[Poly, Sequence[Poly]]) -> "Vector":
        if isinstance(element, Poly):
            return cls.from_polys(ring, [element])
        return cls.from_polys(ring, list(element))

    def to_polys(self) -> tuple[Poly, ...]:
        grouped: list[dict] = [{} for _ in range(self.rank)]
        for (position, monomial), coeff in self.terms.items():
            grouped[position][monomial] = coeff
        return tuple(Poly(self.ring, terms) for terms in grouped)

    def is_zero(self) -> bool:
        return not self.terms

    def lead(self) -> Key:
        if self._lead is None:
            self._lead = max(self.terms, key=pot_key(self.ring.order))
        return self._lead

    def lead_coefficient(self) -> Any:
        return self.terms[self.lead()]

    def degree(self, shifts: Sequence[int]) -> int:
        """Graded degree of the leading term, deg(monomial) + shift of its position."""
        position, monomial = self.lead()
        return sum(monomial) + shifts[position]

    def scaled_shift(self, monomial: tuple[int, ...], coeff: Any) -> dict[Key, Any]:
        return {
            (position, tuple(a + b for a, b in zip(m, monomial))): c * coeff
            for (position, m), c in self.terms.items()
        }

    def monic(self) -> "Vector":
        inverse = self.ring.field.one / self.lead_coefficient()
        return Vector(self.ring, self.rank, {k: c * inverse for k, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.to_polys()) + ")"


def subtract_into(work: dict[Key, Any], other: dict[Key, Any], zero_test: Callable[[Any], bool]) -> None:
    for key, coeff in other.items():
        value = work.get(key)
        if value is None:
            work[key] = -coeff
            continue
        value = value - coeff
        if zero_test(value):
            del work[key]
        else:
            work[key] = value


def reduce_vector(f: Vector, basis: Iterable[Vector]) -> Vector:
    """Full reduction of ``f`` by ``basis`` (the remainder of multivariate division)."""
    basis = [g for g in basis if not g.is_zero()]
    field = f.ring.field
    key = pot_key(f.ring.order)
    work = dict(f.terms)
    remainder: dict[Key, Any] = {}
    leads = [(g.lead(), g.lead_coefficient(), g) for g in basis]
    while work:
        term = max(work, key=key)
        position, monomial = term
        coeff = work[term]
        for (g_position, g_monomial), g_coeff, g in leads:
            if g_position == position and divides(g_monomial, monomial):
                shift = tuple(a - b for a, b in zip(monomial, g_monomial))
                subtract_into(work, g.scaled_shift(shift, coeff / g_coeff), field.is_zero)
                break
        else:
            remainder[term] = work.pop(term)
    return Vector(f.ring, f.rank, remainder)


def s_vector(f: Vector, g: Vector) -> Optional[Vector]:
    """S-polynomial of two vectors, or None when their leading positions differ."""
    (f_position, f_monomial), (g_position, g_monomial) = f.lead(), g.lead()
    if f_position != g_position:
        return None
    lcm = tuple(max(a, b) for a, b in zip(f_monomial, g_monomial))
    left = f.scaled_shift(
        tuple(a - b for a, b in zip(lcm, f_monomial)), f.ring.field.one / f.lead_coefficient()
    )
    right = g.scaled_shift(
        tuple(a - b for a, b in zip(lcm, g_monomial)), f.ring.field.one / g.lead_coefficient()
    )
    subtract_into(left, right, f.ring.field.is_zero)
    return Vector(f.ring, f.rank, left)
