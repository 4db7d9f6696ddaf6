"""Exceptions raised by the decoder laboratory."""


class ProdfecError(Exception):
    """Base class for all laboratory errors."""

    pass


class FieldDomainError(ProdfecError, ValueError):
    """Raised when a field operation is undefined for its argument (e.g. inverse of zero)."""

    pass


class CodeLengthError(ProdfecError, ValueError):
    """Raised when a word or block does not have the shape the code requires."""

    pass


class FitError(ProdfecError):
    """Raised when the waterfall extrapolation refuses to produce a threshold."""

    pass


class SweepConfigError(ProdfecError, ValueError):
    """Raised when an Eb/N0 grid or other sweep option cannot be parsed."""

    pass
