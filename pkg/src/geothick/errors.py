"""Exception hierarchy shared by all geothick modules."""


class GeothickError(Exception):
    """Base class for every error raised by this package."""


class InvalidParametersError(GeothickError, ValueError):
    pass


class DegenerateInputError(GeothickError, ValueError):
    """Input sits in a degenerate configuration (collinear rays, zero angles, ...)."""


class NoReflexAngleError(GeothickError, ValueError):
    """The apex lies inside or on the triangle of its targets."""


class NotConvexPositionError(GeothickError, ValueError):
    pass


class WrongArityError(GeothickError, ValueError):
    pass


class DegenerateTypeError(GeothickError, ValueError):
    """A tripleton has no well-defined type (interior apex or collinear rays)."""


class PreconditionError(GeothickError, ValueError):
    pass


class LemmaViolationError(GeothickError):
    """Raised when a configuration contradicts the one-crossing property.

    Seeing this means the input was not a valid coherent inner drawing.
    """


class InvalidDrawingError(GeothickError, ValueError):
    pass


class InvalidLayeringError(GeothickError, ValueError):
    pass


class SearchExhaustedError(GeothickError):
    pass


class TooLargeError(GeothickError, ValueError):
    pass


class FileFormatError(GeothickError, ValueError):
    pass
