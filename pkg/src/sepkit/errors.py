"""Exception hierarchy. Each class names the violated contract."""


class SepkitError(Exception):
    """Base class for all toolkit errors."""


class NotHermitianError(SepkitError):
    """Matrix deviates from its conjugate transpose beyond tolerance."""


class NotPSDError(SepkitError):
    """Matrix has an eigenvalue below the negative tolerance."""


class BadTraceError(SepkitError):
    """Trace differs from 1 beyond tolerance."""


class DimensionMismatchError(SepkitError):
    """Operand shapes are inconsistent with the declared dimensions."""


class UnsupportedDimsError(SepkitError):
    """Operation is only defined for specific subsystem dimensions."""


class NotDichotomicError(SepkitError):
    """Observable eigenvalues are not {+1, -1} within tolerance."""


class BadWeightsError(SepkitError):
    """Mixture weights are not positive or do not sum to 1."""


class LengthMismatchError(SepkitError):
    """Paired observable lists have different lengths."""


class OutOfRangeError(SepkitError):
    """Scalar argument outside its documented range."""


class InvalidCandidateError(SepkitError):
    """Decomposition candidate violates a named invariant."""


class NoCrossingError(SepkitError):
    """Bisection endpoints give the same verdict; no threshold to find."""


class ParseError(SepkitError):
    """Input file is malformed; message carries a byte offset when known."""
