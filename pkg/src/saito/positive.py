"""Splitting of the logarithmic tangent sheaf when char p divides every degree.

With k = n - 1 and p | deg f_i the Euler derivation is itself a Jacobian
syzygy, so the rank-two kernel should split as O(-1) + O(-d). The degree d
is computed from first-Chern-class bookkeeping and confirmed by an explicit
minimal syzygy basis; the closed formula is reported beside it.
"""

import logging

from certificates.split import SplitCertificate
from config import RunConfig
from errors import CharZero, DegreeNotDivisible, JacobianRankDeficient, LengthMismatch
from groebner import syzygy_basis
from matrices import divisor_of_map, generic_rank, jacobian, mat_mul, maximal_minors
from polys import gcd_multivariate
from sequences import SequenceSpec

from .criterion import euler_column

logger = logging.getLogger(__name__)

FORMULA_NOTE = (
    "printed_d uses the closed formula with +1; d uses the Chern bookkeeping with -1; "
    "only the syzygy oracle certifies"
)


def positive_char_split(sigma: SequenceSpec, *, config: RunConfig = RunConfig()) -> SplitCertificate:
    ring = sigma.ring
    p = ring.field.characteristic()
    if p == 0:
        raise CharZero("the splitting needs a field of positive characteristic")
    n = sigma.n
    if sigma.k != n - 1:
        raise LengthMismatch(f"expected {n - 1} polynomials on P^{n}, got {sigma.k}")
    for index, degree in enumerate(sigma.degrees):
        if degree % p:
            raise DegreeNotDivisible(
                f"characteristic {p} does not divide deg f{index} = {degree}", location=index
            )
    alpha = jacobian(sigma)
    if generic_rank(alpha, config.method) != n - 1:
        raise JacobianRankDeficient(f"the Jacobian does not have rank {n - 1}")

    euler_annihilated = mat_mul(alpha, euler_column(ring)).is_zero()
    gcd_degree = divisor_of_map(alpha, config.method).degree
    d = sum(sigma.degrees) - (n - 1) - gcd_degree - 1
    printed_d = d + 2

    syzygies = syzygy_basis(
        alpha, config.degree_bound_for(sigma), minimal=True, pair_limit=config.pair_limit
    )
    oracle_degrees = tuple(sorted(syzygies.degrees))
    matrix = syzygies.as_matrix()
    certified = False
    if len(syzygies.columns) == 2 and list(oracle_degrees) == sorted([1, d]):
        minors_gcd = gcd_multivariate(maximal_minors(matrix, 2, config.method))
        certified = minors_gcd.is_unit()
    logger.debug(
        "positive_char_split: d=%d printed=%d oracle=%s certified=%s",
        d,
        printed_d,
        oracle_degrees,
        certified,
    )
    notes = [FORMULA_NOTE]
    if syzygies.truncated:
        notes.append(f"syzygy search truncated at degree {syzygies.degree_bound}")
    return SplitCertificate(
        field=ring.field,
        variables=ring.variables,
        order=ring.order,
        sequence=sigma.polys,
        jacobian=alpha,
        char_p=p,
        d=d,
        printed_d=printed_d,
        gcd_degree=gcd_degree,
        oracle_degrees=oracle_degrees,
        syzygies=matrix,
        certified=certified,
        euler_annihilated=euler_annihilated,
        notes=tuple(notes),
    )
