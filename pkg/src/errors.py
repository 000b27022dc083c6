"""Exception hierarchy shared by every logfree module.

Every error carries a stable ``code`` (the name reported by the CLI), a
human message and an optional ``location``: a character offset for parse
errors, a column index for syzygy checks, a fixture or input name otherwise.
"""

from typing import Any, Optional


class LogfreeError(Exception):
    code = "LogfreeError"

    def __init__(
        self,
        message: str,
        location: Any = None,
        witness: Optional[str] = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.location = location
        self.witness = witness

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "code": self.code,
            "message": self.message,
            "location": self.location,
        }
        if self.witness is not None:
            payload["witness"] = self.witness
        return payload


# poly-core


class PolySyntaxError(LogfreeError):
    code = "SyntaxError"


class UnknownVariable(LogfreeError):
    code = "UnknownVariable"


class NonIntegerExponent(LogfreeError):
    code = "NonIntegerExponent"


class FieldMismatch(LogfreeError):
    code = "FieldMismatch"


class VariableListMismatch(LogfreeError):
    code = "VariableListMismatch"


class NotDivisible(LogfreeError):
    code = "NotDivisible"

    def __init__(self, message: str, remainder: Any = None, location: Any = None) -> None:
        super().__init__(
            message,
            location=location,
            witness=None if remainder is None else str(remainder),
        )
        self.remainder = remainder


class DivisionByZero(LogfreeError):
    code = "DivisionByZero"


class IndexOutOfRange(LogfreeError):
    code = "IndexOutOfRange"


class InvalidField(LogfreeError):
    code = "InvalidField"


# linalg


class DimensionMismatch(LogfreeError):
    code = "DimensionMismatch"


class NotSquare(LogfreeError):
    code = "NotSquare"


class RankTooLarge(LogfreeError):
    code = "RankTooLarge"


class ZeroMatrix(LogfreeError):
    code = "ZeroMatrix"


class NonHomogeneousInput(LogfreeError):
    code = "NonHomogeneousInput"


# groebner


class OrderMismatch(LogfreeError):
    code = "OrderMismatch"


class GroebnerLimitExceeded(LogfreeError):
    code = "GroebnerLimitExceeded"


# criterion


class InvalidSequence(LogfreeError):
    code = "InvalidSequence"


class IndependenceFailed(LogfreeError):
    code = "IndependenceFailed"


class NotASyzygy(LogfreeError):
    code = "NotASyzygy"


class NuRankDeficient(LogfreeError):
    code = "NuRankDeficient"


class GammaNotMono(LogfreeError):
    code = "GammaNotMono"


class CharDividesDegree(LogfreeError):
    code = "CharDividesDegree"


class CharZero(LogfreeError):
    code = "CharZero"


class LengthMismatch(LogfreeError):
    code = "LengthMismatch"


class DegreeNotDivisible(LogfreeError):
    code = "DegreeNotDivisible"


class JacobianRankDeficient(LogfreeError):
    code = "JacobianRankDeficient"


class OverlappingBlocks(LogfreeError):
    code = "OverlappingBlocks"


class UncoveredVariables(LogfreeError):
    code = "UncoveredVariables"


class NoCandidate(LogfreeError):
    code = "NoCandidate"


# cli


class ProblemSchemaError(LogfreeError):
    code = "ProblemSchemaError"
