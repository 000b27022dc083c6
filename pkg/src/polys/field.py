"""Exact coefficient fields backed by sympy's polynomial domains."""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Any, Optional

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.domains.domain import Domain

from errors import DivisionByZero, InvalidField

logger = logging.getLogger(__name__)


class FieldKind(str, Enum):
    RATIONALS = "rationals"
    PRIME = "prime"


@lru_cache(maxsize=None)
def _domain(kind: FieldKind, p: Optional[int]) -> Domain:
    if kind is FieldKind.RATIONALS:
        return QQ
    logger.debug("building GF(%d)", p)
    return GF(p, symmetric=False)


@dataclass(frozen=True)
class FieldSpec:
    """The rationals or a prime field F_p.

    Elements are sympy domain elements: ``mpq`` values for the rationals
    (always in lowest terms) and residues modulo ``p`` otherwise.
    """

    kind: FieldKind
    p: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind is FieldKind.PRIME:
            if not isinstance(self.p, int) or isinstance(self.p, bool):
                raise InvalidField("prime field needs an integer p")
            if not isprime(self.p):
                raise InvalidField(f"{self.p} is not prime", location="p")
        elif self.p is not None:
            raise InvalidField("the rationals take no p", location="p")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(FieldKind.PRIME, p)

    @property
    def domain(self) -> Domain:
        return _domain(self.kind, self.p)

    @property
    def zero(self) -> Any:
        return self.domain.zero

    @property
    def one(self) -> Any:
        return self.domain.one

    def characteristic(self) -> int:
        return 0 if self.kind is FieldKind.RATIONALS else int(self.p)  # type: ignore[arg-type]

    def convert(self, value: int) -> Any:
        return self.domain(value)

    def from_ratio(self, numerator: int, denominator: int) -> Any:
        if denominator == 0 or (self.p is not None and denominator % self.p == 0):
            raise DivisionByZero(f"{numerator}/{denominator} has no value in {self}")
        if self.kind is FieldKind.RATIONALS:
            return QQ(numerator, denominator)
        return self.domain(numerator) / self.domain(denominator)

    def is_zero(self, value: Any) -> bool:
        return value == self.domain.zero

    def is_one(self, value: Any) -> bool:
        return value == self.domain.one

    def residue(self, value: Any) -> int:
        """Representative of a prime-field element in [0, p)."""
        return int(self.domain.to_int(value)) % int(self.p)  # type: ignore[arg-type]

    def format(self, value: Any) -> str:
        if self.kind is FieldKind.PRIME:
            return str(self.residue(value))
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    def to_json(self) -> dict[str, Any]:
        if self.kind is FieldKind.PRIME:
            return {"kind": self.kind.value, "p": self.p}
        return {"kind": self.kind.value}

    @classmethod
    def from_json(cls, payload: dict[str, Any]) -> "FieldSpec":
        try:
            kind = FieldKind(payload.get("kind"))
        except ValueError as exc:
            raise InvalidField(f"unknown field kind {payload.get('kind')!r}") from exc
        return cls(kind, payload.get("p"))

    def __str__(self) -> str:
        return "QQ" if self.kind is FieldKind.RATIONALS else f"GF({self.p})"
