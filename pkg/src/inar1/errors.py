class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation."""


class NumericalError(ArithmeticError):
    """Raised when round-off produces a result that cannot be a probability."""
