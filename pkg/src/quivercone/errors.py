"""Exception taxonomy shared by all modules."""


class QuiverConeError(Exception):
    """Base class for all library errors."""


class CyclicQuiverError(QuiverConeError):
    """The arrow set contains an oriented cycle."""


class DuplicateIdError(QuiverConeError):
    """A vertex or arrow id appears more than once."""


class MismatchedQuiverError(QuiverConeError):
    """Vectors defined on different quivers (or of the wrong length) were combined."""


class NotBelowError(QuiverConeError):
    """A dimension vector is not componentwise below the required bound."""


class NegativeExtError(QuiverConeError):
    """Sampled hom fell below the Euler form; sampling failure or Euler-form bug."""


class BadPrimeError(QuiverConeError):
    """The requested field characteristic is not an admissible prime."""


class FieldMismatchError(QuiverConeError):
    """Representations over different prime fields were combined."""


class TooLargeError(QuiverConeError):
    """The subspace enumeration would exceed the configured budget."""


class BudgetError(QuiverConeError):
    """An enumeration or degree budget was exceeded."""


class OracleInconclusiveError(QuiverConeError):
    """Finite-field counts disagree across samples; no answer is guessed."""

    def __init__(self, message, evidence=None):
        super().__init__(message)
        self.evidence = evidence or []


class NotWellCoveringError(QuiverConeError):
    """The ordered decomposition does not satisfy the well-covering criterion."""


class EnvelopeError(QuiverConeError):
    """Input exceeds the supported desk-scale envelope."""
