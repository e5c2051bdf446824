"""Exception types shared across the package."""


class SemipathError(Exception):
    """Base class for all package-specific errors."""


class ShapeMismatch(SemipathError):
    """Operands have incompatible dimensions."""


class InstanceMismatch(SemipathError):
    """Operands belong to different semiring instances."""


class UnsupportedInstance(SemipathError):
    """The requested operation needs a capability this instance lacks."""


class SolverUndefined(SemipathError):
    """A solver hit a scalar operation that is undefined in this instance.

    ``step`` is the size of the leading subsystem being built when the
    operation failed (1 for the very first scalar closure).
    """

    def __init__(self, step, message):
        super().__init__(message)
        self.step = step


class ClosureUndefined(SolverUndefined):
    """A scalar closure needed by the recursion does not exist."""


class InverseUndefined(SolverUndefined):
    """A multiplicative inverse needed by the recursion does not exist."""


class NotStabilized(SemipathError):
    """Partial closure sums did not reach a fixed point within the term budget."""

    def __init__(self, terms, message):
        super().__init__(message)
        self.terms = terms


class EnumerationTooLarge(SemipathError):
    """Exhaustive solution search was asked for more candidates than allowed."""


class ParseError(SemipathError):
    """An instance file is malformed."""


class UnknownSemiring(ParseError):
    """The named semiring is not registered."""


class BadSentinel(ParseError):
    """An infinity sentinel was used with a carrier that does not admit it."""


class IncompatibleRequest(SemipathError):
    """The requested algorithm does not fit the provided instance."""
