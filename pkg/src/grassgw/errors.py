"""Exception types shared across the package."""


class GrassGWError(Exception):
    """Base class for domain errors raised by this package."""


class FrameViolation(GrassGWError):
    pass


class OddFrame(GrassGWError):
    pass


class MalformedSequence(GrassGWError):
    pass


class NotDominant(GrassGWError):
    pass


class MalformedExpression(GrassGWError):
    pass


class OddDimension(GrassGWError):
    pass


class TooLarge(GrassGWError):
    pass


class VerificationMismatch(GrassGWError):
    pass
