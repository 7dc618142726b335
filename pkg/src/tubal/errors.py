"""Exception hierarchy shared by all tubal modules."""


class TubalError(Exception):
    """Base class for all library-specific errors."""


class DimensionError(TubalError):
    """Tensor extents are inconsistent with the requested operation."""


class RankError(TubalError):
    """A rank / oversampling parameter is outside its admissible range."""


class SizeGuardError(TubalError):
    """An oracle path was asked to materialize a matrix beyond its size guard."""


class SymmetryError(TubalError):
    """A Fourier-domain tensor violated the conjugate-symmetry contract."""


class NumericalError(TubalError):
    """A slice-wise factorization failed to converge."""


class FormatError(TubalError):
    """A tensor file is malformed (bad magic, extents, or truncated payload)."""


class ConfigError(TubalError):
    """An invalid CLI / completion configuration."""
