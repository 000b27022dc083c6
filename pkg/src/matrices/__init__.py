from .determinant import DeterminantMethod as DeterminantMethod
from .determinant import determinant as determinant
from .jacobian import jacobian as jacobian
from .matrix import PolyMatrix as PolyMatrix
from .matrix import hstack as hstack
from .matrix import mat_mul as mat_mul
from .minors import DivisorClass as DivisorClass
from .minors import DivisorComparison as DivisorComparison
from .minors import compare_divisors as compare_divisors
from .minors import divisor_of_map as divisor_of_map
from .minors import generic_rank as generic_rank
from .minors import maximal_minors as maximal_minors

__all__ = [
    "PolyMatrix",
    "hstack",
    "mat_mul",
    "DeterminantMethod",
    "determinant",
    "maximal_minors",
    "generic_rank",
    "DivisorClass",
    "divisor_of_map",
    "DivisorComparison",
    "compare_divisors",
    "jacobian",
]
