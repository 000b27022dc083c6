"""Problem files: the JSON input of every logfree command.

Example::

    {
      "schema": "logfree-problem/1",
      "field": {"kind": "rationals"},
      "variables": ["x0", "x1", "x2"],
      "sequence": ["x0*x1*x2"],
      "nu": [["x0", "0"], ["-x1", "x1"], ["0", "-x2"]],
      "gamma": "euler",
      "options": {"order": "grevlex"}
    }
"""

import json
from pathlib import Path
from typing import Literal, Optional, Sequence, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from errors import LogfreeError, ProblemSchemaError
from matrices import PolyMatrix
from polys import FieldKind, FieldSpec, MonomialOrder, Poly, Ring, parse_poly
from saito import Block, BlockEuler, Euler, GammaSpec
from sequences import SequenceSpec

PROBLEM_SCHEMA = "logfree-problem/1"

Rows = list[list[str]]


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


class FieldModel(_Strict):
    kind: FieldKind
    p: Optional[int] = None


class BlockEulerGamma(_Strict):
    block_euler: list[list[str]] = Field(alias="block-euler")


class MatrixGamma(_Strict):
    matrix: Rows


class BlockModel(_Strict):
    variables: list[str]
    sequence: list[str]


class Options(_Strict):
    order: Optional[Literal["grevlex", "lex", "gradedlex"]] = None
    method: Optional[Literal["bareiss", "cofactor"]] = None
    degree_bound: Optional[int] = Field(default=None, ge=0)
    assume_independent: Optional[bool] = None
    pair_limit: Optional[int] = Field(default=None, gt=0)


class ProblemFile(_Strict):
    schema_: Literal["logfree-problem/1"] = Field(alias="schema")
    field: FieldModel
    variables: list[str]
    sequence: list[str] = []
    blocks: Optional[list[BlockModel]] = None
    nu: Optional[Rows] = None
    gamma: Union[Literal["euler"], BlockEulerGamma, MatrixGamma] = "euler"
    matrix: Optional[Rows] = None
    options: Options = Options()


def _location(error: dict) -> str:
    return ".".join(str(part) for part in error["loc"])


def parse_problem(payload: object) -> ProblemFile:
    try:
        problem = ProblemFile.model_validate(payload)
    except ValidationError as e:
        first = e.errors()[0]
        raise ProblemSchemaError(
            f"{_location(first) or 'problem'}: {first['msg']}", location=_location(first)
        ) from None
    _check_blocks_exclusive(problem)
    return problem


def _check_blocks_exclusive(problem: ProblemFile) -> None:
    """``blocks`` builds sigma, nu and gamma itself."""
    if not problem.blocks:
        return
    clashes = [
        name
        for name, present in (
            ("sequence", bool(problem.sequence)),
            ("nu", problem.nu is not None),
            ("gamma", problem.gamma != "euler"),
        )
        if present
    ]
    if clashes:
        raise ProblemSchemaError(
            f"blocks cannot be combined with {', '.join(clashes)}", location=clashes[0]
        )


def load_problem(path: Union[str, Path]) -> ProblemFile:
    text = Path(path).read_text(encoding="utf-8")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ProblemSchemaError(f"not valid JSON: {e.msg}", location=e.pos) from None
    return parse_problem(payload)


def build_ring(problem: ProblemFile, order: MonomialOrder) -> Ring:
    field = FieldSpec(problem.field.kind, problem.field.p)
    return Ring(field, tuple(problem.variables), order)


def parse_located(ring: Ring, text: str, label: str) -> Poly:
    """Parse ``text``, tagging any error with the input it came from."""
    try:
        return parse_poly(text, ring.variables, ring.field, ring.order)
    except LogfreeError as e:
        e.location = {"input": label, "position": e.location}
        raise


def build_sequence(problem: ProblemFile, ring: Ring) -> SequenceSpec:
    if not problem.sequence:
        raise ProblemSchemaError("the problem has no sequence", location="sequence")
    return SequenceSpec(
        tuple(parse_located(ring, text, f"sequence[{i}]") for i, text in enumerate(problem.sequence))
    )


def build_matrix(rows: Sequence[Sequence[str]], ring: Ring, label: str) -> PolyMatrix:
    parsed = [
        [parse_located(ring, text, f"{label}[{i}][{j}]") for j, text in enumerate(row)]
        for i, row in enumerate(rows)
    ]
    return PolyMatrix.from_rows(ring, parsed, ncols=len(rows[0]) if rows else 0)


def build_gamma(problem: ProblemFile, ring: Ring) -> GammaSpec:
    gamma = problem.gamma
    if isinstance(gamma, BlockEulerGamma):
        return BlockEuler(tuple(tuple(group) for group in gamma.block_euler))
    if isinstance(gamma, MatrixGamma):
        return build_matrix(gamma.matrix, ring, "gamma")
    return Euler()


def build_blocks(problem: ProblemFile, ring: Ring) -> list[Block]:
    blocks = []
    for b, block in enumerate(problem.blocks or []):
        polys = tuple(
            parse_located(ring, text, f"blocks[{b}].sequence[{i}]")
            for i, text in enumerate(block.sequence)
        )
        blocks.append(Block(tuple(block.variables), polys))
    return blocks
