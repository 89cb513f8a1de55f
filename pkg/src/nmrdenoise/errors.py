"""Exception hierarchy shared across the package."""


class NmrDenoiseError(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(NmrDenoiseError, ValueError):
    """An argument violates a documented precondition."""


class DegenerateInputError(NmrDenoiseError, ValueError):
    """Input is structurally valid but degenerate (e.g. zero variance)."""


class FormatError(NmrDenoiseError, ValueError):
    """A serialized artifact does not conform to its on-disk format."""


class VersionMismatchError(FormatError):
    """Unknown or unsupported format version string."""


class ShapeMismatchError(FormatError):
    """Payload size or tensor/array shape disagrees with the header."""


class NonFiniteDataError(FormatError):
    """A loaded array contains NaN or infinite values."""
