"""Exception hierarchy.

Everything raised for bad mathematical input derives from :class:`GAError`
(a ``ValueError``).  The CLI maps :class:`ParseError` to exit status 2 and
every other :class:`GAError` to exit status 1.
"""


class GAError(ValueError):
    """Base class for domain errors."""


class SignatureMismatchError(GAError):
    pass


class GradeError(GAError):
    """Input has the wrong grade or parity for the operation."""


class NonInvertibleVersorError(GAError):
    pass


class InvalidFrameError(GAError):
    """Axis, projector or frame does not satisfy its normalization."""


class DegenerateError(GAError):
    """A normalizing quantity (p squared, a spinor bracket, ...) vanishes."""


class AntiAlignedSpinError(DegenerateError):
    pass


class NotNullError(GAError):
    pass


class UnsupportedSignatureError(GAError):
    pass


class ParseError(GAError):
    def __init__(self, message, offset=None, text=None):
        self.offset = offset
        self.text = text
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
