"""Core result records, enums and errors for curvature certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

# Strict inequalities are decided against this relative margin.
STRICT_TOL = 1e-9


class Verdict(Enum):
    """Outcome of a theorem hypothesis check."""

    HYPOTHESES_MET = "hypotheses_met"
    NOT_MET = "not_met"
    DEGENERATE = "degenerate"


class Positivity(Enum):
    """k-positivity classification of an operator spectrum."""

    POSITIVE = "positive"
    NONNEG = "nonneg"
    INDEFINITE = "indefinite"


class EqualityCase(Enum):
    """Equality families of the zero-sum lowest-k bound."""

    ALL_ZERO = "all-zero"
    TWO_LEVEL = "two-level"


class CurvopError(Exception):
    """Base class for every error raised by curvop."""

    default_message = "curvop error"

    def __init__(self, message: str | None = None) -> None:
        if message is None:
            message = self.default_message
        super().__init__(message)


class ValidationError(CurvopError):
    """Raised when an input tensor or field violates its invariants."""

    default_message = "Input failed validation"


class TensorFileError(ValidationError):
    """Raised when a tensor or field file is malformed."""

    default_message = "Malformed tensor file"


class DimensionError(CurvopError):
    """Raised on incompatible or unsupported dimensions."""

    default_message = "Dimension mismatch"


class FrameError(CurvopError):
    """Raised when a frame is not orthonormal."""

    default_message = "Frame is not orthonormal"


class RangeError(CurvopError):
    """Raised when an integer parameter is outside its admissible range."""

    default_message = "Parameter out of range"


class PreconditionError(CurvopError):
    """Raised when an input does not satisfy an operation's precondition."""

    default_message = "Precondition violated"


class NotConformallyFlatError(CurvopError):
    """Raised when a conformally flat input is required but the Weyl part is not small."""

    default_message = "Weyl tensor is not below tolerance; input is not conformally flat"


class EmptyFieldError(CurvopError):
    """Raised when a curvature field has no samples."""

    default_message = "Curvature field has no samples"


class UsageError(CurvopError):
    """Raised when a theorem is requested with missing or inconsistent parameters."""

    default_message = "Invalid theorem parameters"


class NumericalError(CurvopError):
    """Raised when an iterative numerical method fails to converge."""

    default_message = "Numerical method did not converge"


class InternalConsistencyError(CurvopError):
    """Raised when an identity that holds by construction is violated."""

    default_message = "Internal consistency check failed"


@dataclass(slots=True, frozen=True)
class BoundCheck:
    """Uniform record for an inequality lhs >= rhs."""

    lhs: float
    rhs: float
    slack: float
    holds: bool
    equality_case: EqualityCase | None = None

    @classmethod
    def evaluate(cls, lhs: float, rhs: float, equality_case: EqualityCase | None = None) -> BoundCheck:
        slack = lhs - rhs
        return cls(
            lhs=float(lhs),
            rhs=float(rhs),
            slack=float(slack),
            holds=bool(slack >= -STRICT_TOL * (1.0 + abs(rhs))),
            equality_case=equality_case,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "holds": self.holds,
            "equality_case": self.equality_case.value if self.equality_case else None,
        }


@dataclass(slots=True, frozen=True)
class KPositivity:
    """Verdict of a k-positivity test with its margin (the k-th prefix sum)."""

    k: int
    verdict: Positivity
    margin: float

    def to_dict(self) -> dict[str, Any]:
        return {"k": self.k, "verdict": self.verdict.value, "margin": self.margin}


@dataclass(slots=True)
class CertificateReport:
    """Per-theorem verdict with the quantities it was decided on."""

    theorem_id: str
    inputs: dict[str, Any]
    hypothesis_values: dict[str, Any]
    threshold: float
    margin: float
    verdict: Verdict
    conclusion_text: str
    notes: list[str] = field(default_factory=list)

    @property
    def met(self) -> bool:
        return self.verdict is Verdict.HYPOTHESES_MET

    def to_dict(self) -> dict[str, Any]:
        """Convert report to the stable JSON shape."""
        return {
            "theorem_id": self.theorem_id,
            "inputs": dict(self.inputs),
            "hypothesis_values": dict(self.hypothesis_values),
            "threshold": self.threshold,
            "margin": self.margin,
            "verdict": self.verdict.value,
            "conclusion_text": self.conclusion_text,
            "notes": list(self.notes),
        }


def strict_verdict(margin: float, threshold: float) -> Verdict:
    """Verdict for a strict inequality expressed as margin = threshold - lhs."""
    scale = STRICT_TOL * (1.0 + abs(threshold))
    if margin > scale:
        return Verdict.HYPOTHESES_MET
    if margin >= -scale:
        return Verdict.DEGENERATE
    return Verdict.NOT_MET
