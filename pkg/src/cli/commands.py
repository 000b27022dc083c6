"""Command handlers shared by the ``logfree`` entry point and the fixture runner.

Each handler turns a problem file into an :class:`Outcome`: the JSON payload
to emit, the certificate behind it (if any), an exit code and a status line.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Optional

from certificates import SCHEMA, Certificate, FreenessCertificate, SplitCertificate
from config import RunConfig
from errors import InvalidSequence, LogfreeError, ProblemSchemaError
from groebner import algebraic_independence, syzygy_basis
from matrices import PolyMatrix, compare_divisors, divisor_of_map, jacobian
from polys import Ring
from saito import (
    block_sequence,
    check_divisor_free,
    check_sequence,
    find_candidate_nu,
    positive_char_split,
)
from sequences import SequenceSpec

from .problem import (
    ProblemFile,
    build_blocks,
    build_gamma,
    build_matrix,
    build_ring,
    build_sequence,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_CERTIFIED = 1
EXIT_ERROR = 2

COMMANDS = (
    "check-divisor",
    "check-sequence",
    "poschar",
    "syzygies",
    "divisor-of-map",
    "independence",
    "fixtures",
    "verify",
)


@dataclass
class Outcome:
    payload: dict[str, Any]
    exit_code: int
    status: str
    certificate: Optional[Certificate] = None


def _freeness_outcome(cert: FreenessCertificate) -> Outcome:
    status = f"{cert.verdict.value}: h = {cert.h}"
    if cert.is_free:
        status += f", splitting degrees {list(cert.splitting_degrees)}"
    return Outcome(
        cert.generate(), EXIT_OK if cert.is_free else EXIT_NOT_CERTIFIED, status, cert
    )


def error_outcome(error: LogfreeError) -> Outcome:
    return Outcome(
        {"schema": SCHEMA, "verdict": "PreconditionFailed", "error": error.to_dict()},
        EXIT_ERROR,
        f"{error.code}: {error.message}",
    )


def _config(problem: ProblemFile, overrides: dict[str, Any]) -> RunConfig:
    return RunConfig.from_options(problem.options.model_dump(), **overrides)


def run_check_divisor(problem: ProblemFile, config: RunConfig) -> Outcome:
    ring = build_ring(problem, config.order)
    sigma = build_sequence(problem, ring)
    if sigma.k != 1:
        raise InvalidSequence(f"check-divisor takes one polynomial, got {sigma.k}")
    if problem.nu is None:
        raise ProblemSchemaError("check-divisor needs nu", location="nu")
    nu = build_matrix(problem.nu, ring, "nu")
    return _freeness_outcome(check_divisor_free(sigma.polys[0], nu, config=config))


def run_check_sequence(problem: ProblemFile, config: RunConfig) -> Outcome:
    ring = build_ring(problem, config.order)
    if problem.blocks:
        blocks = block_sequence(build_blocks(problem, ring), config=config)
        return _freeness_outcome(
            check_sequence(blocks.sigma, blocks.nu, blocks.gamma, config=config)
        )
    sigma = build_sequence(problem, ring)
    gamma = build_gamma(problem, ring)
    if problem.nu is not None:
        nu = build_matrix(problem.nu, ring, "nu")
    else:
        bound = config.degree_bound_for(sigma)
        candidates = find_candidate_nu(sigma, bound, config=config)
        if not candidates:
            payload = {
                "schema": SCHEMA,
                "kind": "sequence",
                "verdict": "NotCertified",
                "sequence": sigma.to_json(),
                "notes": [f"no candidate nu among syzygies of degree at most {bound}"],
            }
            return Outcome(payload, EXIT_NOT_CERTIFIED, "NotCertified: no candidate nu")
        nu = candidates[0]
    return _freeness_outcome(check_sequence(sigma, nu, gamma, config=config))


def run_poschar(problem: ProblemFile, config: RunConfig) -> Outcome:
    ring = build_ring(problem, config.order)
    cert: SplitCertificate = positive_char_split(build_sequence(problem, ring), config=config)
    verdict = "Free" if cert.certified else "NotCertified"
    status = f"{verdict}: oracle degrees {list(cert.oracle_degrees)}, d = {cert.d}"
    return Outcome(
        cert.generate(), EXIT_OK if cert.certified else EXIT_NOT_CERTIFIED, status, cert
    )


def _source_matrix(
    problem: ProblemFile, config: RunConfig
) -> tuple[Ring, PolyMatrix, Optional[SequenceSpec]]:
    ring = build_ring(problem, config.order)
    if problem.matrix is not None:
        return ring, build_matrix(problem.matrix, ring, "matrix"), None
    sigma = build_sequence(problem, ring)
    return ring, jacobian(sigma), sigma


def run_syzygies(problem: ProblemFile, config: RunConfig) -> Outcome:
    _, matrix, sigma = _source_matrix(problem, config)
    bound = config.syzygy_degree_bound
    if bound is None and sigma is not None:
        bound = config.degree_bound_for(sigma)
    basis = syzygy_basis(matrix, bound, minimal=True, pair_limit=config.pair_limit)
    payload = {"schema": SCHEMA, "kind": "syzygies", **basis.to_json()}
    return Outcome(payload, EXIT_OK, f"{len(basis.columns)} syzygies of degrees {list(basis.degrees)}")


def run_divisor_of_map(problem: ProblemFile, config: RunConfig) -> Outcome:
    """dv of ``matrix`` (default: the Jacobian); with ``nu`` also dv(nu) against dv(matrix * nu)."""
    ring, matrix, _ = _source_matrix(problem, config)
    if problem.nu is not None:
        comparison = compare_divisors(matrix, build_matrix(problem.nu, ring, "nu"), config.method)
        payload = {"schema": SCHEMA, "kind": "divisor-comparison", **comparison.to_json()}
        status = f"dv(nu) = V({comparison.dv_theta.equation}), equal = {comparison.equal}"
        return Outcome(payload, EXIT_OK, status)
    divisor = divisor_of_map(matrix, config.method)
    payload = {"schema": SCHEMA, "kind": "divisor-of-map", **divisor.to_json()}
    return Outcome(payload, EXIT_OK, f"dv = V({divisor.equation})")


def run_independence(problem: ProblemFile, config: RunConfig) -> Outcome:
    ring = build_ring(problem, config.order)
    result = algebraic_independence(build_sequence(problem, ring), pair_limit=config.pair_limit)
    payload = {"schema": SCHEMA, "kind": "independence", **result.to_json()}
    if result.independent:
        return Outcome(payload, EXIT_OK, "algebraically independent")
    return Outcome(payload, EXIT_NOT_CERTIFIED, f"dependent: {result.witness} = 0")


HANDLERS: dict[str, Callable[[ProblemFile, RunConfig], Outcome]] = {
    "check-divisor": run_check_divisor,
    "check-sequence": run_check_sequence,
    "poschar": run_poschar,
    "syzygies": run_syzygies,
    "divisor-of-map": run_divisor_of_map,
    "independence": run_independence,
}


def run_command(
    command: str, problem: ProblemFile, overrides: Optional[dict[str, Any]] = None
) -> Outcome:
    """Run one problem-file command; precondition failures become exit code 2."""
    try:
        config = _config(problem, overrides or {})
        outcome = HANDLERS[command](problem, config)
    except LogfreeError as e:
        logger.debug("%s failed: %s", command, e.code)
        return error_outcome(e)
    logger.debug("%s finished with exit code %d", command, outcome.exit_code)
    return outcome
