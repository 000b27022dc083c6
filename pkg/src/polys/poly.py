"""Sparse multivariate polynomials over an exact field.

A ``Poly`` is a dict from exponent tuples to nonzero field elements, tied
to a ``Ring`` (field, variable names, monomial order). Values never change
after construction; every operation returns a new polynomial.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterator, Mapping, NamedTuple, Optional, Sequence, Union

from errors import (
    DivisionByZero,
    FieldMismatch,
    IndexOutOfRange,
    NotDivisible,
    UnknownVariable,
    VariableListMismatch,
)

from .field import FieldSpec
from .orders import GrevLex, Monomial, MonomialOrder

logger = logging.getLogger(__name__)

NEG_INFINITY = -math.inf


@dataclass(frozen=True)
class Ring:
    field: FieldSpec
    variables: tuple[str, ...]
    order: MonomialOrder = GrevLex()

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise VariableListMismatch(f"repeated variable in {list(self.variables)}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def with_order(self, order: MonomialOrder) -> "Ring":
        return Ring(self.field, self.variables, order)

    def compatible(self, other: "Ring") -> bool:
        return self.field == other.field and self.variables == other.variables

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariable(f"unknown variable {name!r}", location=name) from None

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.constant(1)

    def constant(self, value: Any) -> "Poly":
        if isinstance(value, int):
            value = self.field.convert(value)
        return Poly(self, {(0,) * self.nvars: value})

    def gen(self, index: int) -> "Poly":
        if not 0 <= index < self.nvars:
            raise IndexOutOfRange(f"variable index {index} outside 0..{self.nvars - 1}")
        exponents = tuple(1 if j == index else 0 for j in range(self.nvars))
        return Poly(self, {exponents: self.field.one})

    def var(self, name: str) -> "Poly":
        return self.gen(self.index(name))

    def gens(self) -> tuple["Poly", ...]:
        return tuple(self.gen(j) for j in range(self.nvars))

    def parse(self, text: str) -> "Poly":
        from .parser import parse_poly

        return parse_poly(text, self.variables, self.field, self.order)

    def __str__(self) -> str:
        return f"{self.field}[{', '.join(self.variables)}] ({self.order})"


class Homogeneity(NamedTuple):
    is_homogeneous: bool
    degree: Union[int, float, None]


class Poly:
    __slots__ = ("ring", "_terms")

    def __init__(self, ring: Ring, terms: Optional[Mapping[Monomial, Any]] = None) -> None:
        field = ring.field
        cleaned = {}
        for monomial, coeff in (terms or {}).items():
            if len(monomial) != ring.nvars:
                raise VariableListMismatch(
                    f"monomial {monomial} does not fit {ring.nvars} variables"
                )
            if isinstance(coeff, int):
                coeff = field.convert(coeff)
            if not field.is_zero(coeff):
                cleaned[tuple(monomial)] = coeff
        self.ring = ring
        self._terms = cleaned

    @classmethod
    def _trusted(cls, ring: Ring, terms: dict[Monomial, Any]) -> "Poly":
        poly = cls.__new__(cls)
        poly.ring = ring
        poly._terms = terms
        return poly

    # -- inspection

    @property
    def field(self) -> FieldSpec:
        return self.ring.field

    def term_map(self) -> dict[Monomial, Any]:
        return dict(self._terms)

    def terms(self, order: Optional[MonomialOrder] = None) -> list[tuple[Monomial, Any]]:
        """Terms in strictly descending order."""
        key = (order or self.ring.order).key
        return sorted(self._terms.items(), key=lambda term: key(term[0]), reverse=True)

    def monomials(self) -> Iterator[Monomial]:
        return iter(self._terms)

    def coefficient(self, monomial: Monomial) -> Any:
        return self._terms.get(tuple(monomial), self.field.zero)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def is_unit(self) -> bool:
        """Nonzero of degree zero."""
        return bool(self._terms) and self.is_constant()

    def leading_monomial(self, order: Optional[MonomialOrder] = None) -> Monomial:
        if not self._terms:
            raise DivisionByZero("the zero polynomial has no leading term")
        key = (order or self.ring.order).key
        return max(self._terms, key=key)

    def leading_coefficient(self, order: Optional[MonomialOrder] = None) -> Any:
        return self._terms[self.leading_monomial(order)]

    def leading_term(self, order: Optional[MonomialOrder] = None) -> tuple[Monomial, Any]:
        monomial = self.leading_monomial(order)
        return monomial, self._terms[monomial]

    def total_degree(self) -> Union[int, float]:
        if not self._terms:
            return NEG_INFINITY
        return max(sum(m) for m in self._terms)

    def degree_in(self, index: int) -> Union[int, float]:
        if not 0 <= index < self.ring.nvars:
            raise IndexOutOfRange(f"variable index {index} outside 0..{self.ring.nvars - 1}")
        if not self._terms:
            return NEG_INFINITY
        return max(m[index] for m in self._terms)

    def involves(self, index: int) -> bool:
        return any(m[index] for m in self._terms)

    # -- transforms

    def with_order(self, order: MonomialOrder) -> "Poly":
        return Poly._trusted(self.ring.with_order(order), dict(self._terms))

    def scale(self, factor: Any) -> "Poly":
        if isinstance(factor, int):
            factor = self.field.convert(factor)
        if self.field.is_zero(factor):
            return self.ring.zero()
        return Poly._trusted(self.ring, {m: c * factor for m, c in self._terms.items()})

    def mul_term(self, monomial: Monomial, coeff: Any) -> "Poly":
        if self.field.is_zero(coeff):
            return self.ring.zero()
        return Poly._trusted(
            self.ring,
            {
                tuple(a + b for a, b in zip(m, monomial)): c * coeff
                for m, c in self._terms.items()
            },
        )

    def monic(self) -> "Poly":
        if not self._terms:
            return self
        return self.scale(self.field.one / self.leading_coefficient())

    # -- arithmetic

    def _coerce(self, other: Any) -> Optional["Poly"]:
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return None

    def __add__(self, other: Any) -> "Poly":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        return arith(self, operand, ArithOp.ADD)

    def __radd__(self, other: Any) -> "Poly":
        return self.__add__(other)

    def __sub__(self, other: Any) -> "Poly":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        return arith(self, operand, ArithOp.SUB)

    def __rsub__(self, other: Any) -> "Poly":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        return arith(operand, self, ArithOp.SUB)

    def __mul__(self, other: Any) -> "Poly":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        return arith(self, operand, ArithOp.MUL)

    def __rmul__(self, other: Any) -> "Poly":
        operand = self._coerce(other)
        if operand is None:
            return NotImplemented
        return arith(operand, self, ArithOp.MUL)

    def __neg__(self) -> "Poly":
        return Poly._trusted(self.ring, {m: -c for m, c in self._terms.items()})

    def __pos__(self) -> "Poly":
        return self

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers take a non-negative integer")
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring.compatible(other.ring) and self._terms == other._terms

    def __hash__(self) -> int:
        canonical = tuple(sorted((m, self.field.format(c)) for m, c in self._terms.items()))
        return hash((self.ring.variables, canonical))

    # -- printing

    def _format_monomial(self, monomial: Monomial) -> str:
        factors = []
        for name, exponent in zip(self.ring.variables, monomial):
            if exponent == 1:
                factors.append(name)
            elif exponent > 1:
                factors.append(f"{name}^{exponent}")
        return "*".join(factors)

    def _format_term(self, monomial: Monomial, coeff: Any) -> str:
        field = self.field
        if not any(monomial):
            return field.format(coeff)
        body = self._format_monomial(monomial)
        if field.is_one(coeff):
            return body
        if field.is_one(-coeff) and field.characteristic() == 0:
            return f"-{body}"
        return f"{field.format(coeff)}*{body}"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for position, (monomial, coeff) in enumerate(self.terms()):
            text = self._format_term(monomial, coeff)
            if position == 0:
                parts.append(text)
            elif text.startswith("-"):
                parts.append(f" - {text[1:]}")
            else:
                parts.append(f" + {text}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


class ArithOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"


def check_compatible(a: Poly, b: Poly) -> None:
    if a.ring.field != b.ring.field:
        raise FieldMismatch(f"{a.ring.field} and {b.ring.field} differ")
    if a.ring.variables != b.ring.variables:
        raise VariableListMismatch(
            f"variables {list(a.ring.variables)} and {list(b.ring.variables)} differ"
        )


def arith(a: Poly, b: Poly, op: ArithOp) -> Poly:
    """Exact ring operation; the result lives in ``a``'s ring."""
    check_compatible(a, b)
    field = a.field
    if op is ArithOp.MUL:
        product: dict[Monomial, Any] = {}
        for ma, ca in a._terms.items():
            for mb, cb in b._terms.items():
                monomial = tuple(x + y for x, y in zip(ma, mb))
                product[monomial] = product.get(monomial, field.zero) + ca * cb
        return Poly._trusted(
            a.ring, {m: c for m, c in product.items() if not field.is_zero(c)}
        )

    terms = dict(a._terms)
    for monomial, coeff in b._terms.items():
        value = terms.get(monomial, field.zero)
        value = value + coeff if op is ArithOp.ADD else value - coeff
        if field.is_zero(value):
            terms.pop(monomial, None)
        else:
            terms[monomial] = value
    return Poly._trusted(a.ring, terms)


def divides(small: Monomial, big: Monomial) -> bool:
    return all(s <= b for s, b in zip(small, big))


def exact_divide(a: Poly, b: Poly) -> Poly:
    """Return q with a = q*b.

    Single-divisor division under ``a``'s order; the remainder is unique,
    so a nonzero remainder proves b does not divide a.
    """
    check_compatible(a, b)
    if b.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    field = a.field
    key = a.ring.order.key
    lead_b, lc_b = b.leading_term(a.ring.order)
    inverse = field.one / lc_b
    work = dict(a._terms)
    quotient: dict[Monomial, Any] = {}
    remainder: dict[Monomial, Any] = {}
    while work:
        monomial = max(work, key=key)
        coeff = work[monomial]
        if not divides(lead_b, monomial):
            remainder[monomial] = work.pop(monomial)
            continue
        shift = tuple(x - y for x, y in zip(monomial, lead_b))
        factor = coeff * inverse
        quotient[shift] = quotient.get(shift, field.zero) + factor
        for mb, cb in b._terms.items():
            target = tuple(x + y for x, y in zip(shift, mb))
            value = work.get(target, field.zero) - factor * cb
            if field.is_zero(value):
                work.pop(target, None)
            else:
                work[target] = value
    if remainder:
        rest = Poly._trusted(a.ring, remainder)
        raise NotDivisible(f"{b} does not divide {a}", remainder=rest)
    return Poly(a.ring, quotient)


def partial_derivative(f: Poly, index: int) -> Poly:
    if not 0 <= index < f.ring.nvars:
        raise IndexOutOfRange(
            f"variable index {index} outside 0..{f.ring.nvars - 1}", location=index
        )
    field = f.field
    terms: dict[Monomial, Any] = {}
    for monomial, coeff in f._terms.items():
        exponent = monomial[index]
        if exponent == 0:
            continue
        value = coeff * field.convert(exponent)
        if field.is_zero(value):
            continue
        lowered = monomial[:index] + (exponent - 1,) + monomial[index + 1 :]
        terms[lowered] = value
    return Poly._trusted(f.ring, terms)


def euler_apply(f: Poly) -> Poly:
    """Sum of x_j * d_j f over all variables."""
    result = f.ring.zero()
    for j, x in enumerate(f.ring.gens()):
        result = result + x * partial_derivative(f, j)
    return result


def homogeneity(f: Poly) -> Homogeneity:
    degrees = {sum(m) for m in f.monomials()}
    if not degrees:
        return Homogeneity(True, NEG_INFINITY)
    if len(degrees) == 1:
        return Homogeneity(True, degrees.pop())
    return Homogeneity(False, None)


def embed(f: Poly, ring: Ring, positions: Sequence[int]) -> Poly:
    """Move ``f`` into ``ring``, sending variable j of f to ``positions[j]``."""
    if f.field != ring.field:
        raise FieldMismatch(f"{f.field} and {ring.field} differ")
    terms = {}
    for monomial, coeff in f.term_map().items():
        target = [0] * ring.nvars
        for j, exponent in enumerate(monomial):
            target[positions[j]] += exponent
        terms[tuple(target)] = coeff
    return Poly(ring, terms)
