"""Exception types raised by the library."""

from __future__ import annotations


class SimplexError(ValueError):
    """Invalid vertex labels for a simplex."""

    def __init__(self, message, label=None):
        super().__init__(message)
        self.label = label


class FiltrationError(ValueError):
    """A supplied simplex order is not face-closed."""

    def __init__(self, message, simplex=None):
        super().__init__(message)
        self.simplex = simplex


class NotACycleError(ValueError):
    def __init__(self, message, boundary=frozenset()):
        super().__init__(message)
        self.boundary = boundary


class NotABoundaryError(ValueError):
    def __init__(self, message, homology_class=frozenset()):
        super().__init__(message)
        self.homology_class = homology_class


class NotACocycleError(ValueError):
    def __init__(self, message, coboundary=frozenset()):
        super().__init__(message)
        self.coboundary = coboundary


class NotInKernelError(ValueError):
    """Class lies outside the kernel of Sq^2."""

    def __init__(self, message, image=()):
        super().__init__(message)
        self.image = image


class ContractionError(RuntimeError):
    """A constructed contraction failed verification."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)
