"""Independent re-check of an emitted certificate.

Only the echoed inputs are trusted: the sequence, nu, gamma and the emitted
syzygies are parsed again and every reported polynomial is recomputed from
them. Nothing from the run that produced the certificate is reused.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable

from errors import LogfreeError
from matrices import (
    DeterminantMethod,
    PolyMatrix,
    determinant,
    divisor_of_map,
    hstack,
    jacobian,
    mat_mul,
    maximal_minors,
)
from polys import FieldSpec, Poly, Ring, gcd_multivariate, get_order
from saito.criterion import (
    BlockEuler,
    Euler,
    GammaSpec,
    block_column_order,
    euler_column,
    resolve_gamma,
)
from sequences import SequenceSpec

from .certificate import SCHEMA
from .freeness import CertificateKind, verdict_for

logger = logging.getLogger(__name__)


@dataclass
class VerificationResult:
    ok: bool = True
    problems: list[str] = field(default_factory=list)

    def expect(self, condition: bool, problem: str) -> None:
        if not condition:
            self.ok = False
            self.problems.append(problem)

    def to_json(self) -> dict[str, Any]:
        return {"ok": self.ok, "problems": list(self.problems)}


def _gamma_from_json(ring: Ring, payload: Any) -> GammaSpec:
    if payload == "euler":
        return Euler()
    if isinstance(payload, dict) and "block-euler" in payload:
        return BlockEuler(tuple(tuple(group) for group in payload["block-euler"]))
    if isinstance(payload, dict) and "matrix" in payload:
        return PolyMatrix.from_strings(ring, payload["matrix"])
    raise LogfreeError(f"unrecognized gamma description {payload!r}")


def _monic_gcd(m: PolyMatrix, method: DeterminantMethod) -> Poly:
    return gcd_multivariate(maximal_minors(m, method=method))


def _verify_freeness(payload: dict[str, Any], ring: Ring, result: VerificationResult) -> None:
    method = DeterminantMethod(payload.get("method", DeterminantMethod.BAREISS.value))
    sigma = SequenceSpec(tuple(ring.parse(text) for text in payload["sequence"]))
    nu = PolyMatrix.from_strings(ring, payload["nu"])
    theta = PolyMatrix.from_strings(ring, payload["theta"])
    h, g_theta, g_alpha, g_alphagamma = (
        ring.parse(payload[key]) for key in ("h", "g_theta", "g_alpha", "g_alphagamma")
    )
    result.expect(g_theta * g_alpha == h * g_alphagamma, "g_theta * g_alpha != h * g_alphagamma")
    result.expect(payload["verdict"] == verdict_for(h).value, "verdict does not follow from h")

    alpha = jacobian(sigma)
    result.expect(mat_mul(alpha, nu).is_zero(), "nu is not annihilated by the Jacobian")

    if payload["kind"] == CertificateKind.DIVISOR.value:
        f = sigma.polys[0]
        expected_theta = hstack(euler_column(ring), nu)
        recomputed = (
            determinant(expected_theta, method),
            gcd_multivariate(list(alpha.entries[0])),
            f,
        )
    else:
        gamma = _gamma_from_json(ring, payload["gamma"])
        gamma_matrix, _ = resolve_gamma(gamma, ring)
        expected_theta = hstack(nu, gamma_matrix)
        _verify_block_determinant(payload, gamma, nu, gamma_matrix, method, result)
        recomputed = (
            _monic_gcd(expected_theta, method),
            _monic_gcd(alpha, method),
            _monic_gcd(mat_mul(alpha, gamma_matrix), method),
        )
    result.expect(theta.entries == expected_theta.entries, "theta does not match (nu, gamma)")
    for name, reported, actual in zip(
        ("g_theta", "g_alpha", "g_alphagamma"), (g_theta, g_alpha, g_alphagamma), recomputed
    ):
        result.expect(reported == actual, f"{name} is {reported}, recomputed {actual}")

    _, splitting = nu.infer_grading([0] * nu.nrows)
    result.expect(
        list(splitting) == payload["splitting_degrees"],
        f"splitting degrees {payload['splitting_degrees']} do not match nu ({list(splitting)})",
    )
    chern_sum = sum(sigma.twist_degrees) - int(g_alpha.total_degree())
    chern = payload["chern"]
    result.expect(chern["sum_e"] == sum(splitting), "chern.sum_e is wrong")
    result.expect(chern["sum_d_minus_gcd_degree"] == chern_sum, "chern.sum_d_minus_gcd_degree is wrong")
    result.expect(chern["balanced"] == (sum(splitting) == chern_sum), "chern.balanced is wrong")


def _verify_block_determinant(
    payload: dict[str, Any],
    gamma: GammaSpec,
    nu: PolyMatrix,
    gamma_matrix: PolyMatrix,
    method: DeterminantMethod,
    result: VerificationResult,
) -> None:
    reported = payload.get("det_theta_blocks")
    order = block_column_order(nu, gamma_matrix) if isinstance(gamma, BlockEuler) else None
    if order is None or nu.nrows != nu.ncols + gamma_matrix.ncols:
        result.expect(reported is None, "det_theta_blocks given without a block gamma")
        return
    theta = hstack(nu, gamma_matrix).select_columns(order)
    actual = determinant(theta, method)
    matches = reported is not None and theta.ring.parse(reported) == actual
    result.expect(matches, f"det_theta_blocks is {reported}, recomputed {actual}")


def _verify_split(payload: dict[str, Any], ring: Ring, result: VerificationResult) -> None:
    sigma = SequenceSpec(tuple(ring.parse(text) for text in payload["sequence"]))
    alpha = jacobian(sigma)
    syzygies = PolyMatrix.from_strings(ring, payload["syzygies"])
    result.expect(mat_mul(alpha, syzygies).is_zero(), "the emitted syzygies do not annihilate the Jacobian")

    n = sigma.n
    gcd_degree = divisor_of_map(alpha).degree
    d = sum(sigma.degrees) - (n - 1) - gcd_degree - 1
    result.expect(payload["gcd_degree"] == gcd_degree, f"gcd_degree should be {gcd_degree}")
    result.expect(payload["d"] == d, f"d should be {d}")
    result.expect(payload["printed_d"] == d + 2, f"printed_d should be {d + 2}")

    _, degrees = syzygies.infer_grading([0] * syzygies.nrows)
    oracle = sorted(degrees)
    result.expect(payload["oracle_degrees"] == oracle, f"oracle degrees should be {oracle}")
    result.expect(
        payload["formula_agrees"] == (sorted([1, d + 2]) == oracle), "formula_agrees is wrong"
    )
    certified = (
        syzygies.ncols == 2
        and oracle == sorted([1, d])
        and gcd_multivariate(maximal_minors(syzygies, 2)).is_unit()
    )
    result.expect(payload["certified"] == certified, f"certified should be {certified}")
    result.expect(
        payload["verdict"] == ("Free" if certified else "NotCertified"),
        "verdict does not follow from certified",
    )
    annihilated = mat_mul(alpha, euler_column(ring)).is_zero()
    result.expect(payload["euler_annihilated"] == annihilated, "euler_annihilated is wrong")


CHECKS: dict[str, Callable[[dict[str, Any], Ring, VerificationResult], None]] = {
    CertificateKind.DIVISOR.value: _verify_freeness,
    CertificateKind.SEQUENCE.value: _verify_freeness,
    "split": _verify_split,
}


def verify_certificate(payload: dict[str, Any]) -> VerificationResult:
    result = VerificationResult()
    if payload.get("schema") != SCHEMA:
        result.expect(False, f"unsupported schema {payload.get('schema')!r}")
        return result
    check = CHECKS.get(payload.get("kind", ""))
    if check is None:
        result.expect(False, f"unknown certificate kind {payload.get('kind')!r}")
        return result
    try:
        ring = Ring(
            FieldSpec.from_json(payload["field"]),
            tuple(payload["variables"]),
            get_order(payload["order"]),
        )
        check(payload, ring, result)
    except KeyError as e:
        result.expect(False, f"missing key {e.args[0]!r}")
    except LogfreeError as e:
        result.expect(False, f"{e.code}: {e}")
    logger.debug("verify_certificate: ok=%s, %d problems", result.ok, len(result.problems))
    return result
