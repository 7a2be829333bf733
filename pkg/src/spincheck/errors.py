"""Exception types shared across the package."""


class SpincheckError(Exception):
    """Base class for all package errors."""


class ConfigurationError(SpincheckError):
    """Unsupported root system type, rank, or run configuration."""


class DomainError(SpincheckError, ValueError):
    """An argument lies outside the domain of an operation."""


class ConsistencyError(SpincheckError, ArithmeticError):
    """An internal exactness guarantee was violated (e.g. a non-exact division)."""
