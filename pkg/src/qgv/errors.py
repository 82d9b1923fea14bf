"""Exception types shared across the package."""


class QgvError(Exception):
    """Base class for all qgv errors."""


class PoleError(QgvError):
    """A denominator factor vanished during exact evaluation.

    Carries an optional human-readable description of the offending factor.
    """

    def __init__(self, message="zero denominator factor", factor=None):
        super().__init__(message)
        self.factor = factor


class ZeroToNegativePower(PoleError):
    """0 raised to a negative integer power."""


class PoleOfGamma(QgvError):
    """Gamma evaluated at a nonpositive integer."""


class NonTerminating(QgvError):
    """A series spec has no valid terminating upper parameter."""


class ArityError(QgvError):
    """Instance parameters (n, ell, k) do not match an identity's arity."""


class UnknownIdentity(QgvError):
    """Identity id not present in the registry."""


class SamplingExhausted(QgvError):
    """Pole-free point sampling gave up after max_resample attempts."""


class GridConstructionFailed(QgvError):
    """Could not assemble a pole-free certification grid."""


class NumericallyIllConditioned(QgvError):
    """A float-mode denominator fell below the safe magnitude threshold."""
