"""Exception hierarchy. Every error carries a stable code the CLI prints."""

from __future__ import annotations


class FusionRingError(Exception):
    """Base class for all package errors."""

    code = "ERROR"


class ShapeMismatchError(FusionRingError):
    """Labels, dual, and N do not describe one rank; or malformed label data."""

    code = "SHAPE_MISMATCH"


class NegativeEntryError(FusionRingError):
    code = "NEGATIVE_ENTRY"


class UnknownLabelError(FusionRingError):
    code = "UNKNOWN_LABEL"


class NonconvergenceError(FusionRingError):
    code = "NONCONVERGENCE"


class NotInvertibleError(FusionRingError):
    code = "NOT_INVERTIBLE"


class InvertibleInputError(FusionRingError):
    code = "INVERTIBLE_INPUT"


class MultiplicityViolationError(FusionRingError):
    code = "MULTIPLICITY_VIOLATION"


class PointedInputError(FusionRingError):
    code = "POINTED_INPUT"


class NotGngError(FusionRingError):
    code = "NOT_GNG"


class NotSubringError(FusionRingError):
    code = "NOT_SUBRING"


class IllDefinedGradingError(FusionRingError):
    code = "ILL_DEFINED_GRADING"


class HypothesisFailError(FusionRingError):
    """A verifier was called on input outside its stated hypotheses."""

    code = "HYPOTHESIS_FAIL"


class RankLimitError(FusionRingError):
    code = "RANK_LIMIT"


class InvalidDescriptorError(FusionRingError):
    code = "INVALID_DESCRIPTOR"


class NotAssociativeError(FusionRingError):
    code = "NOT_ASSOCIATIVE"


class InconsistentDataError(FusionRingError):
    code = "INCONSISTENT_DATA"


class ParseError(FusionRingError):
    code = "PARSE_ERROR"


class ValidationFailedError(FusionRingError):
    """Parsed ring fails the axioms; .report holds the full diagnostics."""

    code = "VALIDATION_FAILED"

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class GuardExceededError(FusionRingError):
    code = "GUARD_EXCEEDED"
