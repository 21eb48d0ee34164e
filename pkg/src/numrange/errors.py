"""Exception types shared across the package."""


class NumRangeError(Exception):
    """Base class for all errors raised by this package."""


class BadParameter(NumRangeError):
    pass


class NotHermitian(NumRangeError):
    pass


class NoConvergence(NumRangeError):
    """Iterative computation failed; carries diagnostics text."""

    def __init__(self, message, diagnostics=""):
        super().__init__(message)
        self.diagnostics = diagnostics


class ZeroVector(NumRangeError):
    pass


class ZeroScale(NumRangeError):
    pass


class DegenerateCone(NumRangeError):
    pass


class DegenerateRange(NumRangeError):
    """Numerical range is a point or segment; carries the Degeneracy."""

    def __init__(self, message, degeneracy=None):
        super().__init__(message)
        self.degeneracy = degeneracy


class InsufficientSamples(NumRangeError):
    def __init__(self, message, side=None):
        super().__init__(message)
        self.side = side


class AmbiguousClassification(NumRangeError):
    def __init__(self, message, diagnostics=""):
        super().__init__(message)
        self.diagnostics = diagnostics


class PointNotOnBoundary(NumRangeError):
    pass


# Alias used by eigenpair checks.
NotOnBoundary = PointNotOnBoundary


class NotAnEigenpair(NumRangeError):
    pass


class OutsideRange(NumRangeError):
    pass


class DependentVectors(NumRangeError):
    pass


class AnchorInfeasible(NumRangeError):
    pass


class ScalingViolated(NumRangeError):
    """A scaled probe family broke one of its norm bounds; names the bound."""

    def __init__(self, message, bound=""):
        super().__init__(message)
        self.bound = bound


class NotNormalized(NumRangeError):
    pass


class EmptyFamily(NumRangeError):
    pass
