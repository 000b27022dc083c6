"""Monomial orders as sort keys over exponent tuples.

A larger key means a larger monomial. Every order here is a well-order
compatible with multiplication; the graded ones refine total degree.
"""

import abc
from dataclasses import dataclass
from typing import ClassVar

from errors import ProblemSchemaError

Monomial = tuple[int, ...]


class MonomialOrder(abc.ABC):
    name: ClassVar[str]

    @abc.abstractmethod
    def key(self, monomial: Monomial) -> tuple: ...

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class GrevLex(MonomialOrder):
    name: ClassVar[str] = "grevlex"

    def key(self, monomial: Monomial) -> tuple:
        return (sum(monomial), tuple(-e for e in reversed(monomial)))


@dataclass(frozen=True)
class Lex(MonomialOrder):
    name: ClassVar[str] = "lex"

    def key(self, monomial: Monomial) -> tuple:
        return monomial


@dataclass(frozen=True)
class GradedLex(MonomialOrder):
    name: ClassVar[str] = "gradedlex"

    def key(self, monomial: Monomial) -> tuple:
        return (sum(monomial), monomial)


@dataclass(frozen=True)
class EliminationOrder(MonomialOrder):
    """Grevlex on the first ``split`` variables, ties broken by grevlex on the rest.

    Any monomial involving the first block beats every monomial free of it.
    Used for elimination only; never selectable as a run order.
    """

    split: int
    name: ClassVar[str] = "elimination"

    def key(self, monomial: Monomial) -> tuple:
        head, tail = monomial[: self.split], monomial[self.split :]
        return (
            (sum(head), tuple(-e for e in reversed(head))),
            (sum(tail), tuple(-e for e in reversed(tail))),
        )

    def __str__(self) -> str:
        return f"elimination({self.split})"


ORDERS: dict[str, MonomialOrder] = {
    GrevLex.name: GrevLex(),
    Lex.name: Lex(),
    GradedLex.name: GradedLex(),
}


def get_order(name: str) -> MonomialOrder:
    try:
        return ORDERS[name]
    except KeyError:
        raise ProblemSchemaError(
            f"unknown monomial order {name!r}; expected one of {sorted(ORDERS)}",
            location="order",
        ) from None
