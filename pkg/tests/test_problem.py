"""Tests for problem file parsing."""

import pytest

from cli.problem import (
    PROBLEM_SCHEMA,
    BlockEulerGamma,
    MatrixGamma,
    ProblemFile,
    build_gamma,
    build_ring,
    build_sequence,
    load_problem,
    parse_problem,
)
from errors import PolySyntaxError, ProblemSchemaError
from polys import GrevLex
from saito import BlockEuler, Euler


def minimal(**extra):
    return {
        "schema": PROBLEM_SCHEMA,
        "field": {"kind": "rationals"},
        "variables": ["x0", "x1"],
        "sequence": ["x0"],
        **extra,
    }


def test_load_problem_file(shared_datadir):
    """Test that a problem file loads with default options."""
    problem = load_problem(shared_datadir / "eg3_d3.json")

    assert problem.variables == ["x0", "x1", "x2", "x3"]
    assert len(problem.nu) == 4
    assert problem.gamma == "euler"
    assert problem.options.order is None


def test_unknown_keys_are_rejected(shared_datadir):
    """Test that an unexpected top-level key is reported by name."""
    with pytest.raises(ProblemSchemaError) as excinfo:
        load_problem(shared_datadir / "unknown_key.json")
    assert excinfo.value.location == "colour"


@pytest.mark.parametrize(
    "payload, location",
    [
        (minimal(schema="logfree-problem/2"), "schema"),
        (minimal(options={"degree_bound": -1}), "options.degree_bound"),
        (minimal(options={"order": "revlex"}), "options.order"),
        (minimal(field={"kind": "reals"}), "field.kind"),
    ],
)
def test_schema_errors_carry_locations(payload, location):
    """Test that validation failures name the offending field."""
    with pytest.raises(ProblemSchemaError) as excinfo:
        parse_problem(payload)
    assert excinfo.value.location == location


def test_invalid_json(tmp_path):
    """Test that unparsable JSON becomes a ProblemSchemaError."""
    path = tmp_path / "broken.json"
    path.write_text("{", encoding="utf-8")

    with pytest.raises(ProblemSchemaError):
        load_problem(path)


def test_gamma_variants():
    """Test the three ways to describe gamma."""
    ring = build_ring(parse_problem(minimal()), GrevLex())

    block = parse_problem(minimal(gamma={"block-euler": [["x0"], ["x1"]]}))
    assert isinstance(block.gamma, BlockEulerGamma)
    assert build_gamma(block, ring) == BlockEuler((("x0",), ("x1",)))

    matrix = parse_problem(minimal(gamma={"matrix": [["x0"], ["x1"]]}))
    assert isinstance(matrix.gamma, MatrixGamma)
    assert build_gamma(matrix, ring).shape == (2, 1)

    assert build_gamma(parse_problem(minimal()), ring) == Euler()


def test_parse_errors_name_their_input():
    """Test that a bad polynomial reports which entry it came from."""
    problem = parse_problem(minimal(sequence=["x0", "x0 x1"]))
    ring = build_ring(problem, GrevLex())

    with pytest.raises(PolySyntaxError) as excinfo:
        build_sequence(problem, ring)
    assert excinfo.value.location == {"input": "sequence[1]", "position": 3}


def test_empty_sequence():
    """Test that a command needing a sequence refuses an empty one."""
    problem = parse_problem(minimal(sequence=[]))

    with pytest.raises(ProblemSchemaError):
        build_sequence(problem, build_ring(problem, GrevLex()))


@pytest.mark.parametrize("name", ["eg3_d3.json", "two_blocks.json"])
def test_problem_survives_a_dump(shared_datadir, name):
    """Test that dumping a problem by alias and validating it again gives the same problem."""
    problem = load_problem(shared_datadir / name)

    assert ProblemFile.model_validate(problem.model_dump(by_alias=True)) == problem


BLOCKS = [{"variables": ["x0", "x1"], "sequence": ["x0*x1"]}]


@pytest.mark.parametrize(
    "payload, location",
    [
        (minimal(blocks=BLOCKS), "sequence"),
        (minimal(sequence=[], blocks=BLOCKS, nu=[["x0"], ["-x1"]]), "nu"),
        (minimal(sequence=[], blocks=BLOCKS, gamma={"matrix": [["x0"], ["x1"]]}), "gamma"),
    ],
)
def test_blocks_exclude_explicit_inputs(payload, location):
    """Test that blocks refuse a sequence, nu or gamma given beside them."""
    with pytest.raises(ProblemSchemaError) as excinfo:
        parse_problem(payload)
    assert excinfo.value.location == location


def test_blocks_alone_are_accepted():
    """Test that blocks with the default gamma and no sequence parse."""
    problem = parse_problem(minimal(sequence=[], blocks=BLOCKS))

    assert problem.blocks[0].variables == ["x0", "x1"]
