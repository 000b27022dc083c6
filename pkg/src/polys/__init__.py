from .field import FieldKind as FieldKind
from .field import FieldSpec as FieldSpec
from .gcd import gcd_multivariate as gcd_multivariate
from .orders import EliminationOrder as EliminationOrder
from .orders import GradedLex as GradedLex
from .orders import GrevLex as GrevLex
from .orders import Lex as Lex
from .orders import MonomialOrder as MonomialOrder
from .orders import get_order as get_order
from .parser import parse_poly as parse_poly
from .poly import NEG_INFINITY as NEG_INFINITY
from .poly import ArithOp as ArithOp
from .poly import Poly as Poly
from .poly import Ring as Ring
from .poly import arith as arith
from .poly import euler_apply as euler_apply
from .poly import exact_divide as exact_divide
from .poly import homogeneity as homogeneity
from .poly import partial_derivative as partial_derivative

__all__ = [
    "FieldKind",
    "FieldSpec",
    "MonomialOrder",
    "GrevLex",
    "Lex",
    "GradedLex",
    "EliminationOrder",
    "get_order",
    "Ring",
    "Poly",
    "NEG_INFINITY",
    "ArithOp",
    "arith",
    "exact_divide",
    "partial_derivative",
    "euler_apply",
    "homogeneity",
    "gcd_multivariate",
    "parse_poly",
]
