"""Exception types shared across the package."""


class EntswapError(ValueError):
    """Base class for all errors raised by this package."""


class NotHermitianError(EntswapError):
    """Input matrix deviates from its adjoint beyond tolerance."""


class NotPsdError(EntswapError):
    """Hermitian input has an eigenvalue below the allowed floor."""


class BadIndexError(EntswapError):
    """Index or index set outside the valid range."""


class BadDimError(EntswapError):
    """Matrix dimension does not match the operation's requirement."""


class BadParamError(EntswapError):
    """Scalar parameter outside its allowed interval."""


class NotAStateError(EntswapError):
    """Matrix fails the density-matrix invariants (Hermitian, unit trace, PSD)."""


class InvalidPovmError(EntswapError):
    """Effect list fails the POVM invariants; message carries the violations."""


class DegenerateEffectError(EntswapError):
    """Effect trace too small to define a conditional state."""


class NoBracketError(EntswapError):
    """Root bracketing failed: both endpoints classify identically."""


class NonMonotoneWarning(UserWarning):
    """Measure is not monotone on the bisection bracket; root may not be unique."""
