# src/hecke_spectra/errors.py
from typing import Any, Dict, Optional


class HeckeSpectraError(Exception):
    """Base class for every error raised by hecke_spectra."""

    exit_status = 1

    def __init__(self, message: str, **context: Any):
        super().__init__(message)
        self.context: Dict[str, Any] = context

    def to_dict(self) -> Dict[str, Any]:
        data = {"error": type(self).__name__, "message": str(self)}
        for key, value in self.context.items():
            data[key] = value if isinstance(value, (int, str, float, bool, list, dict)) or value is None else str(value)
        return data


# --- Input errors (exit status 2) ---

class InputError(HeckeSpectraError, ValueError):
    exit_status = 2

class JobFileError(InputError):
    pass

class UnknownPreset(InputError):
    pass

class LatticeMismatch(InputError):
    pass

class DimensionMismatch(InputError):
    pass

class NotARoot(InputError):
    pass

class NotFactorable(InputError):
    pass

class TextFormatError(InputError):
    pass

class InvalidParameter(InputError):
    pass

class NonIntegralGrading(InputError):
    pass

class IncompatibleMaps(InputError):
    pass

class RankTooLarge(InputError):
    pass

class GroupTooLarge(InputError):
    pass

class SearchSpaceTooLarge(InputError):
    def __init__(self, message: str, cardinality: int, limit: Optional[int] = None):
        super().__init__(message, cardinality=cardinality, limit=limit)
        self.cardinality = cardinality

class ZeroFactor(InputError):
    pass

class ZeroDenominator(InputError):
    pass


# --- Mathematical failures (exit status 1) ---

class MathematicalFailure(HeckeSpectraError):
    exit_status = 1

class PoleAtPoint(MathematicalFailure):
    pass

class PoleAtValue(MathematicalFailure):
    pass

class NotResidual(MathematicalFailure):
    pass

class NotDiscrete(MathematicalFailure):
    pass

class NonConstantRatio(MathematicalFailure):
    def __init__(self, message: str, leftover: Optional[str] = None, **context: Any):
        super().__init__(message, leftover=leftover, **context)
        self.leftover = leftover

class RelationViolated(MathematicalFailure):
    def __init__(self, message: str, product: Optional[str] = None):
        super().__init__(message, product=product)
        self.product = product

class NotInAlcovePosition(MathematicalFailure):
    pass


class InternalInvariantViolation(HeckeSpectraError, AssertionError):
    """An identity that must hold by theory failed; this is a bug, not bad input."""
    exit_status = 1
