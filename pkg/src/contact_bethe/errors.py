"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class ValidationError(ValueError):
    """A parameter record violates its defining constraint."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class InconsistentBoundaryError(ValidationError):
    pass


class PoleError(ArithmeticError):
    """A Y-operator denominator vanishes at the requested momentum difference."""

    def __init__(self, message, denominator=None, pair=None):
        super().__init__(message)
        self.denominator = denominator
        self.pair = pair
