"""Exception and warning types shared across the library."""

__all__ = [
    "DomainError",
    "UnsupportedParametersError",
    "FamilyExhaustedError",
    "DegenerateRecurrenceError",
    "DegreeExceedsGridError",
    "AdmissibilityError",
    "ConditioningError",
    "QuadratureAccuracyWarning",
    "ExtrapolationWarning",
]


class DomainError(ValueError):
    """Argument lies outside the mathematical domain of an operation."""


class UnsupportedParametersError(ValueError):
    """Operation is only defined on a restricted parameter set (e.g. alpha = beta)."""


class FamilyExhaustedError(DomainError):
    """Requested degree exceeds the finite discrete polynomial family."""


class DegenerateRecurrenceError(ArithmeticError):
    """A recurrence step has a vanishing leading coefficient."""


class DegreeExceedsGridError(DomainError):
    """Expansion degree is larger than the grid supports."""


class AdmissibilityError(ValueError):
    """Degree beyond the uniform-boundedness threshold while strict mode is on."""


class ConditioningError(RuntimeError):
    """Design matrix is numerically rank deficient."""


class QuadratureAccuracyWarning(UserWarning):
    """Node refinement hit its cap before reaching the requested tolerance."""


class ExtrapolationWarning(UserWarning):
    """Evaluation outside the natural domain in lenient mode."""
