from typing import Optional


class KnotThicknessError(Exception):
    """Base class for every error raised by this package."""


class DiagramError(KnotThicknessError, ValueError):
    pass


class MalformedInputError(DiagramError):
    """Input text could not be tokenized.

    Args:
        message: What went wrong.
        position: Character offset of the offending token, when known.
    """

    def __init__(self, message: str, position: Optional[int] = None) -> None:
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class DuplicateLabelError(DiagramError):
    pass


class InconsistentDiagramError(DiagramError):
    pass


class NonPlanarDiagramError(DiagramError):
    pass


class NonRealizableGaussCodeError(NonPlanarDiagramError):
    pass


class UnsupportedDiagramError(DiagramError):
    pass


class LinkDiagramError(UnsupportedDiagramError):
    pass


class CheckerboardError(DiagramError):
    pass


class AlternationInconsistencyError(DiagramError):
    pass


class StateError(KnotThicknessError):
    pass


class NoEligibleEdgeError(StateError):
    pass


class IneligibleEdgeError(StateError):
    pass


class EmptyStateSetError(StateError):
    pass


class ResourceLimitError(KnotThicknessError):
    pass


class StateLimitExceeded(ResourceLimitError):
    def __init__(self, limit: int) -> None:
        super().__init__(f"Kauffman state enumeration exceeded the cap of {limit} states")
        self.limit = limit


class GradingError(KnotThicknessError):
    pass


class GradingConventionError(GradingError):
    pass


class NonIntegerGradingError(GradingError):
    pass


class DecompositionViolation(GradingError):
    pass


class OracleError(KnotThicknessError):
    pass


class SingularMinorError(OracleError):
    pass
