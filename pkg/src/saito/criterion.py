"""Saito-type freeness checks.

For a sequence sigma with Jacobian alpha, a matrix nu of Jacobian syzygies
and a matrix gamma with alpha*gamma injective, theta = (nu | gamma) satisfies

    gcd(minors theta) * gcd(minors alpha) = h * gcd(minors alpha*gamma)

and a nonzero constant h certifies that the kernel of alpha splits as a sum
of O(-e_j), e_j the column degrees of nu.
"""

import logging
from dataclasses import dataclass
from typing import Any, Optional, Sequence, Union

from certificates.freeness import CertificateKind, FreenessCertificate, verdict_for
from config import RunConfig
from errors import (
    CharDividesDegree,
    DimensionMismatch,
    GammaNotMono,
    IndependenceFailed,
    NonHomogeneousInput,
    NotASyzygy,
    NuRankDeficient,
    OverlappingBlocks,
    UncoveredVariables,
)
from groebner import algebraic_independence
from matrices import (
    PolyMatrix,
    determinant,
    generic_rank,
    hstack,
    jacobian,
    mat_mul,
    maximal_minors,
)
from polys import Poly, Ring, exact_divide, gcd_multivariate, homogeneity
from sequences import SequenceSpec

logger = logging.getLogger(__name__)

SQUAREFREE_NOTE = (
    "square-freeness of the input is the caller's responsibility; "
    "a non-reduced input shows up as NotDivisible or a nonconstant g_alpha"
)
SUFFICIENT_NOTE = "NotCertified means this nu does not certify freeness, not that sigma is not free"


def euler_column(ring: Ring) -> PolyMatrix:
    """The Euler derivation (x_0, ..., x_n)^T as an (n+1) x 1 graded column."""
    if ring.nvars < 2:
        raise DimensionMismatch("the Euler column needs at least two variables")
    return PolyMatrix.from_rows(
        ring, [[x] for x in ring.gens()], [0] * ring.nvars, [1], ncols=1
    )


def _validate_partition(ring: Ring, partition: Sequence[Sequence[str]]) -> list[list[int]]:
    seen: set[int] = set()
    blocks = []
    for group in partition:
        indices = [ring.index(name) for name in group]
        overlap = seen.intersection(indices)
        if overlap or len(set(indices)) != len(indices):
            names = sorted(ring.variables[i] for i in overlap) or list(group)
            raise OverlappingBlocks(f"variables {names} appear in more than one block")
        seen.update(indices)
        blocks.append(indices)
    missing = [ring.variables[i] for i in range(ring.nvars) if i not in seen]
    if missing:
        raise UncoveredVariables(f"variables {missing} belong to no block", location=missing)
    return blocks


def block_euler(ring: Ring, partition: Sequence[Sequence[str]]) -> PolyMatrix:
    """One Euler column per variable group."""
    blocks = _validate_partition(ring, partition)
    rows = [[ring.zero()] * len(blocks) for _ in range(ring.nvars)]
    for b, indices in enumerate(blocks):
        for i in indices:
            rows[i][b] = ring.gen(i)
    return PolyMatrix.from_rows(
        ring, rows, [0] * ring.nvars, [1] * len(blocks), ncols=len(blocks)
    )


@dataclass(frozen=True)
class Euler:
    def build(self, ring: Ring) -> PolyMatrix:
        return euler_column(ring)

    def to_json(self) -> Any:
        return "euler"


@dataclass(frozen=True)
class BlockEuler:
    partition: tuple[tuple[str, ...], ...]

    def build(self, ring: Ring) -> PolyMatrix:
        return block_euler(ring, self.partition)

    def to_json(self) -> Any:
        return {"block-euler": [list(group) for group in self.partition]}


GammaSpec = Union[PolyMatrix, Euler, BlockEuler]


def block_column_order(nu: PolyMatrix, gamma_matrix: PolyMatrix) -> Optional[list[int]]:
    """Columns of theta = (nu | gamma) regrouped block by block.

    Each gamma column spans one block; every nu column is placed before the
    gamma column whose support contains its own. None when some nu column
    fits no block.
    """
    supports = [
        {i for i, entry in enumerate(column) if entry} for column in gamma_matrix.columns()
    ]
    groups: list[list[int]] = [[] for _ in supports]
    for j, column in enumerate(nu.columns()):
        rows = {i for i, entry in enumerate(column) if entry}
        owner = next((b for b, support in enumerate(supports) if rows <= support), None)
        if owner is None or not rows:
            return None
        groups[owner].append(j)
    order = []
    for b, group in enumerate(groups):
        order.extend(group)
        order.append(nu.ncols + b)
    return order


def resolve_gamma(gamma: GammaSpec, ring: Ring) -> tuple[PolyMatrix, Any]:
    if isinstance(gamma, PolyMatrix):
        return gamma, {"matrix": gamma.to_json()}
    return gamma.build(ring), gamma.to_json()


def _check_syzygies(alpha: PolyMatrix, nu: PolyMatrix) -> None:
    for j in range(nu.ncols):
        product = mat_mul(alpha, nu.select_columns([j]))
        if not product.is_zero():
            raise NotASyzygy(
                f"column {j} of nu is not a Jacobian syzygy: alpha * v = {product.column(0)}",
                location=j,
            )


def _minor_gcd(m: PolyMatrix, config: RunConfig) -> Poly:
    """Monic gcd of the maximal minors under the run order."""
    minors = maximal_minors(m, method=config.method)
    return gcd_multivariate([minor.with_order(config.order) for minor in minors])


def _splitting_degrees(nu: PolyMatrix) -> tuple[int, ...]:
    _, column_degrees = nu.infer_grading([0] * nu.nrows)
    return column_degrees


def check_divisor_free(
    f: Poly, nu: PolyMatrix, *, config: RunConfig = RunConfig()
) -> FreenessCertificate:
    """Classical Saito criterion for a reduced hypersurface V(f) in P^n.

    theta = (Euler | nu) is square; h = det(theta) * g_alpha / f, which is
    det(theta) / f for square-free f in characteristic zero.
    """
    is_homogeneous, degree = homogeneity(f)
    if f.is_zero() or not is_homogeneous:
        raise NonHomogeneousInput(f"{f} is not a nonzero homogeneous polynomial")
    f = f.with_order(config.order)
    ring = f.ring
    p = ring.field.characteristic()
    if p and degree % p == 0:
        raise CharDividesDegree(f"characteristic {p} divides deg f = {degree}")
    sigma = SequenceSpec((f,))
    if nu.shape != (ring.nvars, ring.nvars - 1):
        raise DimensionMismatch(
            f"nu must be {ring.nvars}x{ring.nvars - 1}, got {nu.nrows}x{nu.ncols}"
        )
    alpha = jacobian(sigma)
    _check_syzygies(alpha, nu)

    theta = hstack(euler_column(ring), nu)
    det_theta = determinant(theta, config.method)
    g_alpha = gcd_multivariate(list(alpha.entries[0]))
    h = exact_divide(det_theta * g_alpha, f)
    verdict = verdict_for(h)
    logger.debug("check_divisor_free: h = %s, verdict %s", h, verdict.value)
    return FreenessCertificate(
        kind=CertificateKind.DIVISOR,
        verdict=verdict,
        h=h,
        g_theta=det_theta,
        g_alpha=g_alpha,
        g_alphagamma=f,
        splitting_degrees=_splitting_degrees(nu),
        order=config.order,
        field=ring.field,
        variables=ring.variables,
        sequence=(f,),
        nu=nu,
        gamma="euler",
        theta=theta,
        twist_degrees=sigma.twist_degrees,
        method=config.method,
        det_theta=det_theta,
        notes=(SQUAREFREE_NOTE, "theta = (Euler | nu)"),
    )


def check_sequence(
    sigma: SequenceSpec,
    nu: PolyMatrix,
    gamma: GammaSpec = Euler(),
    *,
    config: RunConfig = RunConfig(),
) -> FreenessCertificate:
    ring = sigma.ring
    n, k = sigma.n, sigma.k
    if not config.assume_independent:
        independence = algebraic_independence(sigma, pair_limit=config.pair_limit)
        if not independence.independent:
            raise IndependenceFailed(
                f"the sequence satisfies {independence.witness} = 0",
                witness=str(independence.witness),
            )
    alpha = jacobian(sigma)
    if nu.nrows != n + 1 or nu.ncols != n + 1 - k:
        raise DimensionMismatch(
            f"nu must be {n + 1}x{n + 1 - k}, got {nu.nrows}x{nu.ncols}"
        )
    _check_syzygies(alpha, nu)
    if generic_rank(nu, config.method) != n + 1 - k:
        raise NuRankDeficient(f"nu does not have generic rank {n + 1 - k}")

    gamma_matrix, gamma_json = resolve_gamma(gamma, ring)
    if gamma_matrix.nrows != n + 1:
        raise DimensionMismatch(f"gamma must have {n + 1} rows, got {gamma_matrix.nrows}")
    alpha_gamma = mat_mul(alpha, gamma_matrix)
    if generic_rank(alpha_gamma, config.method) != gamma_matrix.ncols:
        raise GammaNotMono("alpha * gamma is not injective")

    theta = hstack(nu, gamma_matrix)
    g_theta = _minor_gcd(theta, config)
    g_alpha = _minor_gcd(alpha, config)
    g_alphagamma = _minor_gcd(alpha_gamma, config)
    h = exact_divide(g_theta * g_alpha, g_alphagamma)
    verdict = verdict_for(h)
    det_theta: Optional[Poly] = None
    det_theta_blocks: Optional[Poly] = None
    if theta.nrows == theta.ncols:
        det_theta = determinant(theta, config.method)
        order = block_column_order(nu, gamma_matrix) if isinstance(gamma, BlockEuler) else None
        if order is not None:
            det_theta_blocks = determinant(theta.select_columns(order), config.method)
    logger.debug("check_sequence: h = %s, verdict %s", h, verdict.value)

    notes = ["theta = (nu | gamma)", SUFFICIENT_NOTE]
    return FreenessCertificate(
        kind=CertificateKind.SEQUENCE,
        verdict=verdict,
        h=h,
        g_theta=g_theta,
        g_alpha=g_alpha,
        g_alphagamma=g_alphagamma,
        splitting_degrees=_splitting_degrees(nu),
        order=config.order,
        field=ring.field,
        variables=ring.variables,
        sequence=sigma.polys,
        nu=nu,
        gamma=gamma_json,
        theta=theta,
        twist_degrees=sigma.twist_degrees,
        method=config.method,
        det_theta=det_theta,
        det_theta_blocks=det_theta_blocks,
        notes=tuple(notes),
    )
