"""Exception hierarchy shared by every engine and the CLI."""
from typing import Any, Dict


class FeqnError(Exception):
    """Base error carrying a machine-readable detail payload."""

    error = "FEQN_ERROR"

    def __init__(self, message: str, **context: Any):
        super().__init__(message)
        self.message = message
        self.context = context

    @property
    def detail(self) -> Dict[str, Any]:
        return {"error": self.error, "message": self.message, **self.context}


# Malformed input (exit status 2)
class SpecError(FeqnError):
    error = "INVALID_SPEC"


class DomainError(FeqnError):
    error = "INVALID_DOMAIN"


class InvarianceError(FeqnError):
    error = "INVARIANCE_FAILED"


class PreconditionError(FeqnError):
    error = "PRECONDITION_VIOLATED"


class TableError(FeqnError):
    error = "MISSING_TABLE_ENTRY"


class InconsistencyError(FeqnError):
    error = "EQUATION_VIOLATED"


class ConstantMismatchError(InconsistencyError):
    error = "CONSTANT_MISMATCH"


class OffsetContradictionError(InconsistencyError):
    error = "OFFSET_CONTRADICTION"


class StitchError(FeqnError):
    error = "STITCH_FAILED"


class ModelLimitError(FeqnError):
    error = "OUTSIDE_RATIONAL_MATRIX_MODEL"


class SizeGuardError(FeqnError):
    error = "SIZE_GUARD_EXCEEDED"


# A proof step that cannot fail did fail
class InternalError(FeqnError):
    error = "INTERNAL_ERROR"
