from dataclasses import dataclass
from typing import Any

from matrices import PolyMatrix, mat_mul
from polys import FieldSpec, MonomialOrder, Poly

from .certificate import Certificate


@dataclass(frozen=True)
class SplitCertificate(Certificate):
    """Positive-characteristic splitting T = O(-1) + O(-d), confirmed by explicit syzygies.

    ``d`` comes from first-Chern-class bookkeeping, ``printed_d`` from the
    closed formula; only the syzygy oracle can certify.
    """

    field: FieldSpec
    variables: tuple[str, ...]
    order: MonomialOrder
    sequence: tuple[Poly, ...]
    jacobian: PolyMatrix
    char_p: int
    d: int
    printed_d: int
    gcd_degree: int
    oracle_degrees: tuple[int, ...]
    syzygies: PolyMatrix
    certified: bool
    euler_annihilated: bool
    notes: tuple[str, ...] = ()

    @property
    def formula_agrees(self) -> bool:
        return sorted([1, self.printed_d]) == list(self.oracle_degrees)

    def annihilation_holds(self) -> bool:
        return mat_mul(self.jacobian, self.syzygies).is_zero()

    def generate(self) -> dict[str, Any]:
        return {
            "schema": self.schema,
            "kind": "split",
            "verdict": "Free" if self.certified else "NotCertified",
            "field": self.field.to_json(),
            "variables": list(self.variables),
            "order": str(self.order),
            "sequence": [str(f) for f in self.sequence],
            "char_p": self.char_p,
            "d": self.d,
            "printed_d": self.printed_d,
            "gcd_degree": self.gcd_degree,
            "oracle_degrees": list(self.oracle_degrees),
            "formula_agrees": self.formula_agrees,
            "certified": self.certified,
            "euler_annihilated": self.euler_annihilated,
            "syzygies": self.syzygies.to_json(),
            "notes": list(self.notes),
        }
