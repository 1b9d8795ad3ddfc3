"""
Exception hierarchy shared by every module.
Each error carries a machine-readable code, the CLI exit code it maps to,
and an optional JSON-able witness.
"""

from typing import Any, Dict, Optional


class PolymatroidError(ValueError):
    """Base class for domain and validation errors"""

    exit_code = 1

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.message = message
        self.witness = witness

    @property
    def code(self) -> str:
        return type(self).__name__

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": self.message, "witness": self.witness}


# ===== Domain errors (exit 1) =====

class AxiomViolation(PolymatroidError):
    """A rank table fails normalization, monotonicity or submodularity"""

    def __init__(self, axiom: str, message: str, witness: Optional[Any] = None):
        super().__init__(message, witness)
        self.axiom = axiom


class CageTooSmall(PolymatroidError):
    pass


class NotMConvex(PolymatroidError):
    pass


class DimensionMismatch(PolymatroidError):
    pass


class NegativeExponent(PolymatroidError):
    pass


class ZeroPolynomial(PolymatroidError):
    pass


class EmptyIdeal(PolymatroidError):
    pass


class InvalidParameter(PolymatroidError):
    pass


class RelationInvalid(PolymatroidError):
    pass


class EmptyPiece(PolymatroidError):
    pass


class NotSymmetric(PolymatroidError):
    pass


# ===== Malformed input (exit 2) =====

class MalformedInput(PolymatroidError):
    exit_code = 2


class MissingSubset(MalformedInput):
    pass


class UnknownFixture(MalformedInput):
    pass


# ===== Cross-check failures (exit 3) =====

class CrossCheckMismatch(PolymatroidError):
    """Two independent computations disagree, or a theorem check failed"""

    exit_code = 3
