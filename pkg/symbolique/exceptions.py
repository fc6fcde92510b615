"""Error hierarchy for symbolique."""

from typing import Any, Optional


class SymboliqueError(Exception):
    """Base class for every error raised by symbolique."""


class NotAMatroidError(SymboliqueError, ValueError):
    """A set family violates a matroid axiom."""

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness


class EmptyFamilyError(SymboliqueError, ValueError):
    pass


class GroundSetTooLargeError(SymboliqueError, ValueError):
    pass


class RankOutOfRangeError(SymboliqueError, ValueError):
    pass


class ParameterOutOfRangeError(SymboliqueError, ValueError):
    pass


class InvalidSteinerSystemError(SymboliqueError, ValueError):
    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness


class MixedAmbientError(SymboliqueError, ValueError):
    """Monomials or ideals over different variable counts were combined."""


class ZeroIdealError(SymboliqueError, ValueError):
    pass


class EmptySupportError(SymboliqueError, ValueError):
    pass


class LevelOutOfRangeError(SymboliqueError, ValueError):
    pass


class NotSquarefreeError(SymboliqueError, ValueError):
    pass


class ZeroOrUnitIdealError(SymboliqueError, ValueError):
    pass


class NegativePowerError(SymboliqueError, ValueError):
    pass


class NotAMinimalGeneratorError(SymboliqueError, ValueError):
    pass


class InputFormatError(SymboliqueError, ValueError):
    """Input text or JSON could not be understood."""


class InternalInconsistencyError(SymboliqueError, RuntimeError):
    """Two routes to a proven-equal quantity disagreed."""


class BudgetExceededError(SymboliqueError, RuntimeError):
    pass
