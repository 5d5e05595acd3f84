"""Exception types shared across the package."""


class StartransError(Exception):
    """Base class for all package-specific errors."""


class InvalidPermutation(StartransError):
    """Image list is not a bijection on 0..degree-1."""


class DegreeMismatch(StartransError):
    """Operands act on point sets of different sizes."""


class DomainNotInvariant(StartransError):
    """A group was asked for its action on a set it does not stabilise."""


class CapExceeded(StartransError):
    """Input exceeds a configured size cap."""


class GraphFormatError(StartransError):
    """Malformed graph or generator file; carries a 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class HypothesisNotMet(StartransError):
    """A fast-path check refused because its structural hypotheses fail."""


class NotAnAutomorphism(StartransError):
    """A supplied generator does not preserve adjacency."""


class FalsificationError(StartransError):
    """A verified computation contradicts a documented expectation.

    Raised when an instance that satisfies the classifier's hypotheses
    matches no case, or when a construction provably cannot deliver its
    advertised invariants.  The CLI maps this to exit code 2.
    """
