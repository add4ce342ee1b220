"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where a formula is defined."""


class ConsistencyError(ArithmeticError):
    """An internal numerical invariant was violated (e.g. a residue that must vanish)."""


class ResourceError(RuntimeError):
    """The requested computation exceeds the supported problem size."""


class EdgeListError(ValueError):
    """Malformed edge-list input."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
