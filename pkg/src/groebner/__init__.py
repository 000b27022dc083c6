from .buchberger import GroebnerBasis as GroebnerBasis
from .buchberger import buchberger as buchberger
from .buchberger import normal_form as normal_form
from .buchberger import s_polynomial as s_polynomial
from .elimination import IndependenceResult as IndependenceResult
from .elimination import algebraic_independence as algebraic_independence
from .elimination import jacobian_criterion as jacobian_criterion
from .syzygy import SyzygyBasis as SyzygyBasis
from .syzygy import syzygy_basis as syzygy_basis

__all__ = [
    "GroebnerBasis",
    "buchberger",
    "normal_form",
    "s_polynomial",
    "SyzygyBasis",
    "syzygy_basis",
    "IndependenceResult",
    "algebraic_independence",
    "jacobian_criterion",
]
