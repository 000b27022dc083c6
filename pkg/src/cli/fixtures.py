"""Built-in regression corpus run by ``logfree fixtures``.

Each fixture is a problem file plus the exit code and payload fields it must
produce. Certificates emitted along the way are re-checked with
:func:`certificates.verify.verify_certificate`.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, Sequence, Union

from certificates import canonical_json
from certificates.verify import verify_certificate

from .commands import EXIT_ERROR, EXIT_NOT_CERTIFIED, EXIT_OK, Outcome, run_command
from .problem import PROBLEM_SCHEMA, parse_problem

logger = logging.getLogger(__name__)

QQ = {"kind": "rationals"}

EG3_D3_NU = [
    ["x3", "x0", "2*x1"],
    ["2*x0", "-x1", "x2"],
    ["3*x1", "-3*x2", "0"],
    ["0", "3*x3", "3*x0"],
]
EG3_D3_QUARTIC = "3*x0^2*x1^2 - 4*x0^3*x2 - 4*x1^3*x3 + 6*x0*x1*x2*x3 - x2^2*x3^2"
EG3_D3_PRINTED = "x0^2*x1^2 - 4*x0^3*x2 - 4*x1^3*x3 + 6*x0*x1*x2*x3 - x2^2*x3^2"
EG3_D4_SEQUENCE = [
    "x2^2 - 2*x1*x3 + 2*x0*x4",
    "2*x2^3 - 6*x1*x2*x3 + 9*x0*x3^2 + 6*x1^2*x4 - 12*x0*x2*x4",
]
EG3_D4_NU = [
    ["2*x1", "2*x0", "0"],
    ["3*x2", "x1", "x0"],
    ["3*x3", "0", "x1"],
    ["2*x4", "-x3", "x2"],
    ["0", "-2*x4", "x3"],
]


def _vars(count: int) -> list[str]:
    return [f"x{i}" for i in range(count)]


@dataclass(frozen=True)
class Fixture:
    name: str
    command: str
    problem: dict[str, Any]
    exit_code: int
    expect: dict[str, Any] = field(default_factory=dict)


FIXTURES: tuple[Fixture, ...] = (
    Fixture(
        "eg3-d3-divisor",
        "check-divisor",
        {"field": QQ, "variables": _vars(4), "sequence": [EG3_D3_QUARTIC], "nu": EG3_D3_NU},
        EXIT_OK,
        {"verdict": "Free", "h": "6", "splitting_degrees": [1, 1, 1]},
    ),
    Fixture(
        "eg3-d3-printed-quartic",
        "check-divisor",
        {"field": QQ, "variables": _vars(4), "sequence": [EG3_D3_PRINTED], "nu": EG3_D3_NU},
        EXIT_ERROR,
        {"error.code": "NotASyzygy", "error.location": 0},
    ),
    Fixture(
        "eg3-d4-sequence",
        "check-sequence",
        {"field": QQ, "variables": _vars(5), "sequence": EG3_D4_SEQUENCE, "nu": EG3_D4_NU},
        EXIT_OK,
        {"verdict": "Free", "h": "1", "splitting_degrees": [1, 1, 1]},
    ),
    Fixture(
        "eg3-d4-search",
        "check-sequence",
        {
            "field": QQ,
            "variables": _vars(5),
            "sequence": EG3_D4_SEQUENCE,
            "options": {"degree_bound": 2},
        },
        EXIT_OK,
        {"verdict": "Free", "splitting_degrees": [1, 1, 1]},
    ),
    Fixture(
        "eg1-two-blocks",
        "check-sequence",
        {
            "field": QQ,
            "variables": ["x00", "x01", "x10", "x11"],
            "blocks": [
                {"variables": ["x00", "x01"], "sequence": ["x00*x01"]},
                {"variables": ["x10", "x11"], "sequence": ["x10*x11"]},
            ],
        },
        EXIT_OK,
        {
            "verdict": "Free",
            "h": "1",
            "det_theta": "-4*x00*x01*x10*x11",
            "det_theta_blocks": "4*x00*x01*x10*x11",
            "splitting_degrees": [1, 1],
            "twists": [-1, -1],
        },
    ),
    Fixture(
        "eg2-blocks",
        "check-sequence",
        {
            "field": QQ,
            "variables": _vars(5),
            "blocks": [
                {"variables": ["x0", "x1", "x2"], "sequence": ["x0*x1*x2"]},
                {"variables": ["x3", "x4"], "sequence": ["x3*x4"]},
            ],
        },
        EXIT_OK,
        {"verdict": "Free", "splitting_degrees": [1, 1, 1]},
    ),
    Fixture(
        "counterexample-dv",
        "divisor-of-map",
        {
            "field": QQ,
            "variables": _vars(3),
            "matrix": [["x1", "x0", "0"], ["x2", "0", "x0"]],
            "nu": [["x0", "x0"], ["-x1", "x1"], ["-x2", "x2"]],
        },
        EXIT_OK,
        {
            "dv_alpha.equation": "x0",
            "dv_theta.equation": "x0",
            "dv_composite.equation": "x0",
            "dv_composite.rank": 1,
            "equal": True,
        },
    ),
    Fixture(
        "smoke-p1",
        "check-sequence",
        {"field": QQ, "variables": _vars(2), "sequence": ["x0"], "nu": [["0"], ["1"]]},
        EXIT_OK,
        {"verdict": "Free", "h": "1", "splitting_degrees": [0]},
    ),
    Fixture(
        "poschar-f3",
        "poschar",
        {"field": {"kind": "prime", "p": 3}, "variables": _vars(3), "sequence": ["x0*x1*x2"]},
        EXIT_OK,
        {"d": 1, "printed_d": 3, "oracle_degrees": [1, 1], "formula_agrees": False},
    ),
    Fixture(
        "poschar-f2",
        "poschar",
        {"field": {"kind": "prime", "p": 2}, "variables": _vars(3), "sequence": ["x0^2 + x1*x2"]},
        EXIT_OK,
        {"d": 0, "printed_d": 2, "oracle_degrees": [0, 1], "formula_agrees": False},
    ),
    Fixture(
        "fermat-cubic",
        "check-divisor",
        {
            "field": QQ,
            "variables": _vars(3),
            "sequence": ["x0^3 + x1^3 + x2^3"],
            "nu": [["x1^2", "0"], ["-x0^2", "x2^2"], ["0", "-x1^2"]],
        },
        EXIT_NOT_CERTIFIED,
        {"verdict": "NotCertified", "h": "x1^2"},
    ),
)


@dataclass
class FixtureResult:
    name: str
    outcome: Outcome
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _lookup(payload: dict[str, Any], dotted: str) -> Any:
    value: Any = payload
    for part in dotted.split("."):
        value = value.get(part) if isinstance(value, dict) else None
    return value


def run_fixture(fixture: Fixture, overrides: Optional[dict[str, Any]] = None) -> FixtureResult:
    problem = parse_problem({"schema": PROBLEM_SCHEMA, **fixture.problem})
    outcome = run_command(fixture.command, problem, overrides)
    result = FixtureResult(fixture.name, outcome)
    if outcome.exit_code != fixture.exit_code:
        result.failures.append(f"exit code {outcome.exit_code}, expected {fixture.exit_code}")
    for key, expected in fixture.expect.items():
        actual = _lookup(outcome.payload, key)
        if actual != expected:
            result.failures.append(f"{key} = {actual!r}, expected {expected!r}")
    if outcome.certificate is not None:
        check = verify_certificate(outcome.payload)
        result.failures.extend(f"verify: {issue}" for issue in check.problems)
    logger.debug("fixture %s: %d failures", fixture.name, len(result.failures))
    return result


def run_fixtures(
    emit_dir: Optional[Union[str, Path]] = None,
    names: Optional[Sequence[str]] = None,
    overrides: Optional[dict[str, Any]] = None,
) -> list[FixtureResult]:
    """Run the corpus in fixed order, writing ``<name>.json`` per fixture into ``emit_dir``."""
    selected = [f for f in FIXTURES if names is None or f.name in names]
    results = [run_fixture(fixture, overrides) for fixture in selected]
    if emit_dir is not None:
        directory = Path(emit_dir)
        directory.mkdir(parents=True, exist_ok=True)
        for result in results:
            (directory / f"{result.name}.json").write_text(
                canonical_json(result.outcome.payload), encoding="utf-8"
            )
    return results
