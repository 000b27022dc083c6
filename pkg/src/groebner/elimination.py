"""Algebraic independence of a sequence by elimination.

The kernel of y_i -> f_i is the x-free part of a Groebner basis of
{y_i - f_i} under an order eliminating the x variables.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from matrices import generic_rank, jacobian
from polys import EliminationOrder, GrevLex, Poly, Ring
from polys.poly import embed
from sequences import SequenceSpec

from .buchberger import DEFAULT_PAIR_LIMIT, buchberger

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndependenceResult:
    independent: bool
    witness: Optional[Poly] = None

    def to_json(self) -> dict:
        return {
            "independent": self.independent,
            "witness": None if self.witness is None else str(self.witness),
        }


def _relation_names(sigma: SequenceSpec) -> tuple[str, ...]:
    taken = set(sigma.ring.variables)
    for prefix in ("y", "_y"):
        names = tuple(f"{prefix}{i + 1}" for i in range(sigma.k))
        if not taken.intersection(names):
            return names
    raise ValueError("no free names for relation variables")


def algebraic_independence(
    sigma: SequenceSpec, *, pair_limit: int = DEFAULT_PAIR_LIMIT
) -> IndependenceResult:
    """Decide whether the f_i satisfy a polynomial relation.

    When they do, the witness is one relation in y1..yk, monic under grevlex.
    Elimination decides; in characteristic zero the Jacobian criterion is
    only compared against it.
    """
    result = _eliminate(sigma, pair_limit)
    if sigma.ring.field.characteristic() == 0:
        expected = jacobian_criterion(sigma)
        if expected != result.independent:
            logger.debug(
                "Jacobian criterion says %s, elimination says %s", expected, result.independent
            )
    return result


@lru_cache(maxsize=64)
def _eliminate(sigma: SequenceSpec, pair_limit: int) -> IndependenceResult:
    ring = sigma.ring
    nx = ring.nvars
    y_names = _relation_names(sigma)
    big = Ring(ring.field, ring.variables + y_names, EliminationOrder(nx))
    x_positions = list(range(nx))
    gens = [
        big.gen(nx + i) - embed(f, big, x_positions) for i, f in enumerate(sigma.polys)
    ]
    gb = buchberger(gens, pair_limit=pair_limit)
    y_ring = Ring(ring.field, y_names, GrevLex())
    for g in gb.generators:
        if any(any(m[:nx]) for m in g.monomials()):  # type: ignore[union-attr]
            continue
        relation = Poly(
            y_ring, {m[nx:]: c for m, c in g.term_map().items()}  # type: ignore[union-attr]
        ).monic()
        logger.debug("dependent sequence, relation %s", relation)
        return IndependenceResult(False, relation)
    return IndependenceResult(True)


def jacobian_criterion(sigma: SequenceSpec) -> bool:
    """Full-rank Jacobian; agrees with elimination in characteristic zero only."""
    return generic_rank(jacobian(sigma)) == sigma.k
