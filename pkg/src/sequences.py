from dataclasses import dataclass
from typing import Sequence

from errors import InvalidSequence, NonHomogeneousInput
from polys import FieldSpec, GrevLex, MonomialOrder, Poly, Ring, homogeneity, parse_poly
from polys.poly import check_compatible


@dataclass(frozen=True)
class SequenceSpec:
    """A sequence (f_1, ..., f_k) of homogeneous polynomials on P^n."""

    polys: tuple[Poly, ...]

    def __post_init__(self) -> None:
        polys = tuple(self.polys)
        object.__setattr__(self, "polys", polys)
        if not polys:
            raise InvalidSequence("a sequence needs at least one polynomial")
        for index, f in enumerate(polys):
            check_compatible(polys[0], f)
            if f.is_zero():
                raise InvalidSequence(f"f{index} is zero", location=index)
            if not homogeneity(f).is_homogeneous:
                raise NonHomogeneousInput(f"f{index} = {f} is not homogeneous", location=index)
            if f.total_degree() < 1:
                raise InvalidSequence(f"f{index} = {f} is constant", location=index)
        if len(polys) > self.n:
            raise InvalidSequence(
                f"{len(polys)} polynomials exceed the dimension n = {self.n}"
            )

    @classmethod
    def parse(
        cls,
        texts: Sequence[str],
        variables: Sequence[str],
        field: FieldSpec,
        order: MonomialOrder = GrevLex(),
    ) -> "SequenceSpec":
        return cls(tuple(parse_poly(text, variables, field, order) for text in texts))

    @property
    def ring(self) -> Ring:
        return self.polys[0].ring

    @property
    def n(self) -> int:
        return self.ring.nvars - 1

    @property
    def k(self) -> int:
        return len(self.polys)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(int(f.total_degree()) for f in self.polys)

    @property
    def twist_degrees(self) -> tuple[int, ...]:
        return tuple(d - 1 for d in self.degrees)

    def to_json(self) -> list[str]:
        return [str(f) for f in self.polys]
