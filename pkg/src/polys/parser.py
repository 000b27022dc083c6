"""Text grammar for polynomial expressions.

Integers, rationals ``a/b``, variable names, ``+ - * ^`` and parentheses.
Juxtaposition is not multiplication and ``^`` takes a non-negative integer
literal only.
"""

import logging
from typing import Sequence

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from errors import LogfreeError, NonIntegerExponent, PolySyntaxError, UnknownVariable

from .field import FieldSpec
from .orders import GrevLex, MonomialOrder
from .poly import Poly, Ring

logger = logging.getLogger(__name__)

GRAMMAR = r"""
?start: sum

?sum: product
    | sum "+" product   -> add
    | sum "-" product   -> sub

?product: unary
    | product "*" unary -> mul

?unary: power
    | "-" unary         -> neg
    | "+" unary         -> pos

?power: atom
    | atom "^" exponent -> pow

exponent: INT           -> exponent
    | "-" INT           -> bad_exponent
    | RATIONAL          -> bad_exponent
    | DECIMAL           -> bad_exponent
    | NAME              -> bad_exponent
    | "(" sum ")"       -> bad_exponent

?atom: RATIONAL         -> rational
    | INT               -> integer
    | NAME              -> variable
    | "(" sum ")"

RATIONAL.2: /\d+\/\d+/
DECIMAL.2: /\d+\.\d+/
INT: /\d+/
NAME: /[A-Za-z_][A-Za-z0-9_]*/

%import common.WS
%ignore WS
"""

_PARSER = Lark(GRAMMAR, parser="lalr", propagate_positions=True)


class _PolyBuilder(Transformer):
    def __init__(self, ring: Ring) -> None:
        super().__init__()
        self.ring = ring

    def integer(self, children):
        (token,) = children
        return self.ring.constant(int(token))

    def rational(self, children):
        (token,) = children
        numerator, denominator = str(token).split("/")
        value = self.ring.field.from_ratio(int(numerator), int(denominator))
        return self.ring.constant(value)

    def variable(self, children):
        (token,) = children
        name = str(token)
        if name not in self.ring.variables:
            raise UnknownVariable(
                f"unknown variable {name!r} at position {token.start_pos}",
                location=token.start_pos,
            )
        return self.ring.var(name)

    def exponent(self, children):
        (token,) = children
        return int(token)

    @v_args(meta=True)
    def bad_exponent(self, meta, children):
        position = getattr(meta, "start_pos", None)
        raise NonIntegerExponent(
            f"exponent at position {position} is not a non-negative integer literal",
            location=position,
        )

    def pow(self, children):
        base, exponent = children
        return base**exponent

    def add(self, children):
        return children[0] + children[1]

    def sub(self, children):
        return children[0] - children[1]

    def mul(self, children):
        return children[0] * children[1]

    def neg(self, children):
        return -children[0]

    def pos(self, children):
        return children[0]


def parse_poly(
    text: str,
    variables: Sequence[str],
    field: FieldSpec,
    order: MonomialOrder = GrevLex(),
) -> Poly:
    """Parse ``text`` into a canonical polynomial over ``field``."""
    ring = Ring(field, tuple(variables), order)
    try:
        tree = _PARSER.parse(text)
    except UnexpectedEOF as exc:
        raise PolySyntaxError(
            f"unexpected end of input in {text!r}", location=len(text)
        ) from exc
    except UnexpectedInput as exc:
        position = getattr(exc, "pos_in_stream", None)
        if position is None or position < 0:
            position = len(text)
        raise PolySyntaxError(
            f"unexpected input at position {position} in {text!r}",
            location=position,
        ) from exc
    try:
        return _PolyBuilder(ring).transform(tree)
    except VisitError as exc:
        if isinstance(exc.orig_exc, LogfreeError):
            raise exc.orig_exc from None
        raise
