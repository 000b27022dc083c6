import logging
from itertools import combinations

from config import RunConfig
from errors import IndependenceFailed
from groebner import algebraic_independence, syzygy_basis
from matrices import PolyMatrix, generic_rank, jacobian, maximal_minors
from polys import gcd_multivariate
from sequences import SequenceSpec

logger = logging.getLogger(__name__)


def find_candidate_nu(
    sigma: SequenceSpec, degree_bound: int, *, config: RunConfig = RunConfig()
) -> list[PolyMatrix]:
    """Candidate nu matrices built from minimal Jacobian syzygies.

    A candidate takes n + 1 - k generators whose degrees add up to
    sum(d_i) - deg(g_alpha) and has full generic rank. Candidates come
    ordered by degree vector, then by generator indices. An empty list only
    says nothing was found up to ``degree_bound``.
    """
    if not config.assume_independent:
        independence = algebraic_independence(sigma, pair_limit=config.pair_limit)
        if not independence.independent:
            raise IndependenceFailed(
                f"the sequence satisfies {independence.witness} = 0",
                witness=str(independence.witness),
            )
    alpha = jacobian(sigma)
    g_alpha = gcd_multivariate(maximal_minors(alpha, method=config.method))
    target = sum(sigma.twist_degrees) - int(g_alpha.total_degree())
    width = sigma.n + 1 - sigma.k

    basis = syzygy_basis(alpha, degree_bound, minimal=True, pair_limit=config.pair_limit)
    ring = sigma.ring
    found = []
    for indices in combinations(range(len(basis.columns)), width):
        degrees = tuple(basis.degrees[i] for i in indices)
        if sum(degrees) != target:
            continue
        candidate = PolyMatrix.from_columns(
            ring, [basis.columns[i] for i in indices], ring.nvars
        )
        if generic_rank(candidate, config.method) == width:
            found.append((degrees, indices, candidate))
    found.sort(key=lambda item: (item[0], item[1]))
    logger.debug("find_candidate_nu: %d candidates at bound %d", len(found), degree_bound)
    return [candidate for _, _, candidate in found]
