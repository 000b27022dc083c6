from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional

from matrices import DeterminantMethod, PolyMatrix
from polys import FieldSpec, MonomialOrder, Poly

from .certificate import Certificate


class Verdict(str, Enum):
    FREE = "Free"
    NOT_CERTIFIED = "NotCertified"
    PRECONDITION_FAILED = "PreconditionFailed"


class CertificateKind(str, Enum):
    DIVISOR = "divisor"
    SEQUENCE = "sequence"


def verdict_for(h: Poly) -> Verdict:
    """Free exactly when h is a nonzero constant."""
    return Verdict.FREE if h.is_unit() else Verdict.NOT_CERTIFIED


@dataclass(frozen=True)
class FreenessCertificate(Certificate):
    """Outcome of a Saito-type check.

    ``g_theta * g_alpha == h * g_alphagamma`` holds exactly and can be
    re-checked from the echoed inputs alone. With a block Euler gamma,
    ``det_theta_blocks`` is det(theta) with each block's nu columns next to
    its own Euler column, the product of the per-block determinants.
    """

    kind: CertificateKind
    verdict: Verdict
    h: Poly
    g_theta: Poly
    g_alpha: Poly
    g_alphagamma: Poly
    splitting_degrees: tuple[int, ...]
    order: MonomialOrder
    field: FieldSpec
    variables: tuple[str, ...]
    sequence: tuple[Poly, ...]
    nu: PolyMatrix
    gamma: Any
    theta: PolyMatrix
    twist_degrees: tuple[int, ...]
    method: DeterminantMethod = DeterminantMethod.BAREISS
    det_theta: Optional[Poly] = None
    det_theta_blocks: Optional[Poly] = None
    notes: tuple[str, ...] = ()

    @property
    def twists(self) -> tuple[int, ...]:
        return tuple(-e for e in self.splitting_degrees)

    @property
    def is_free(self) -> bool:
        return self.verdict is Verdict.FREE

    @property
    def chern_sum(self) -> int:
        """Sum of d_i minus deg g_alpha, the value the splitting degrees must add up to."""
        return sum(self.twist_degrees) - int(self.g_alpha.total_degree())

    @property
    def chern_balanced(self) -> bool:
        return sum(self.splitting_degrees) == self.chern_sum

    def identity_holds(self) -> bool:
        return self.g_theta * self.g_alpha == self.h * self.g_alphagamma

    def generate(self) -> dict[str, Any]:
        return {
            "schema": self.schema,
            "kind": self.kind.value,
            "verdict": self.verdict.value,
            "field": self.field.to_json(),
            "variables": list(self.variables),
            "order": str(self.order),
            "method": self.method.value,
            "sequence": [str(f) for f in self.sequence],
            "nu": self.nu.to_json(),
            "gamma": self.gamma,
            "theta": self.theta.to_json(),
            "det_theta": None if self.det_theta is None else str(self.det_theta),
            "det_theta_blocks": (
                None if self.det_theta_blocks is None else str(self.det_theta_blocks)
            ),
            "h": str(self.h),
            "g_theta": str(self.g_theta),
            "g_alpha": str(self.g_alpha),
            "g_alphagamma": str(self.g_alphagamma),
            "splitting_degrees": list(self.splitting_degrees),
            "twists": list(self.twists),
            "chern": {
                "sum_e": sum(self.splitting_degrees),
                "sum_d_minus_gcd_degree": self.chern_sum,
                "balanced": self.chern_balanced,
            },
            "notes": list(self.notes),
        }
