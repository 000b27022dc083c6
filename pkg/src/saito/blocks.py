"""Sequences assembled from polynomials on disjoint groups of variables.

Each block contributes its own syzygy matrix, placed block-diagonally, and
its own Euler column. A block of two variables carrying one polynomial f
uses the column (d_1 f, -d_0 f); larger blocks take the first candidate
found by the syzygy search in the block's own variables.
"""

import logging
from dataclasses import dataclass
from typing import Sequence

from config import RunConfig
from errors import InvalidSequence, NoCandidate
from matrices import PolyMatrix
from polys import Poly, Ring
from polys.poly import embed, partial_derivative
from sequences import SequenceSpec

from .criterion import BlockEuler, _validate_partition
from .search import find_candidate_nu

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Block:
    variables: tuple[str, ...]
    polys: tuple[Poly, ...]


@dataclass(frozen=True)
class BlockSequence:
    sigma: SequenceSpec
    nu: PolyMatrix
    gamma: BlockEuler


def _restrict(f: Poly, ring: Ring, indices: Sequence[int]) -> Poly:
    terms = {}
    for monomial, coeff in f.term_map().items():
        if any(e for j, e in enumerate(monomial) if j not in indices):
            raise InvalidSequence(f"{f} uses variables outside its block {list(ring.variables)}")
        terms[tuple(monomial[j] for j in indices)] = coeff
    return Poly(ring, terms)


def _block_columns(
    block: Block, indices: list[int], ambient: Ring, config: RunConfig
) -> list[list[Poly]]:
    if len(indices) == 2 and len(block.polys) == 1:
        f = block.polys[0]
        return [[partial_derivative(f, indices[1]), -partial_derivative(f, indices[0])]]
    local = Ring(ambient.field, block.variables, ambient.order)
    sub_sigma = SequenceSpec(tuple(_restrict(f, local, indices) for f in block.polys))
    candidates = find_candidate_nu(sub_sigma, config.degree_bound_for(sub_sigma), config=config)
    if not candidates:
        raise NoCandidate(
            f"no syzygy matrix found for the block {list(block.variables)}",
            location=list(block.variables),
        )
    local_nu = candidates[0]
    return [
        [embed(entry, ambient, indices) for entry in column] for column in local_nu.columns()
    ]


def block_sequence(blocks: Sequence[Block], *, config: RunConfig = RunConfig()) -> BlockSequence:
    if not blocks or not blocks[0].polys:
        raise InvalidSequence("the first block needs at least one polynomial")
    ambient = blocks[0].polys[0].ring
    partition = [block.variables for block in blocks]
    index_groups = _validate_partition(ambient, partition)

    polys: list[Poly] = []
    columns: list[list[Poly]] = []
    for block, indices in zip(blocks, index_groups):
        for f in block.polys:
            _restrict(f, Ring(ambient.field, block.variables, ambient.order), indices)
        polys.extend(block.polys)
        for local_column in _block_columns(block, indices, ambient, config):
            column = [ambient.zero()] * ambient.nvars
            for row, entry in zip(indices, local_column):
                column[row] = entry
            columns.append(column)

    sigma = SequenceSpec(tuple(polys))
    nu = PolyMatrix.from_columns(ambient, columns, ambient.nvars)
    gamma = BlockEuler(tuple(tuple(group) for group in partition))
    logger.debug("block_sequence: %d blocks, nu is %dx%d", len(blocks), nu.nrows, nu.ncols)
    return BlockSequence(sigma, nu, gamma)
