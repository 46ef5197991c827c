"""Exception types shared across the package.

Exit-code mapping for the CLI: FormatError / ResourceError and their
subclasses are input or resource problems (exit 2); mathematical
violations are never raised, they are reported in validation output
(exit 1 decided by the caller from report content).
"""


class BraidcolorError(Exception):
    """Base class for all package errors."""


class FormatError(BraidcolorError):
    """Malformed input: bad table shape, bad braid string, bad selector."""


class ConstructionError(BraidcolorError):
    """A constructor's preconditions failed (non-unit parameter, bad
    homomorphism, circle operation not a group, mismatched carriers)."""


class UnsupportedInverseError(BraidcolorError):
    """An inverse map was requested that the object cannot supply."""


class AxiomViolationError(BraidcolorError):
    """A derived quantity required an axiom that the object breaks,
    e.g. extracting the diagonal map when the diagonal is not coherent."""


class ResourceError(BraidcolorError):
    """A configured budget or limit would be exceeded."""


class PreconditionError(BraidcolorError):
    """An operation was called on a state that violates its contract,
    e.g. a dimension estimate at a point that is not fixed."""


class NoConvergenceError(BraidcolorError):
    """The fixed-point solver failed to reach the tolerance near a seed."""

    def __init__(self, message, best_state=None, best_residual=None, iterations=0):
        super().__init__(message)
        self.best_state = best_state
        self.best_residual = best_residual
        self.iterations = iterations
