"""Exception types shared across the package.

Domain errors (preconditions a caller can violate) all derive from
``MagnitudeError`` so front ends can map them to a single exit path.
``UndecidedError`` is separate in spirit: it marks an honest "not decidable
at this precision/fuel budget", not a caller mistake.
"""


class MagnitudeError(Exception):
    """Base class for domain errors raised by this package."""


class ParseError(MagnitudeError):
    """Text form does not denote a valid element."""


class ModelMismatchError(MagnitudeError):
    """Operands belong to different models, or to no shipped model."""


class NotGreaterError(MagnitudeError):
    """Subtraction b - a requires a < b; there is no zero element."""


class DiscreteModelError(MagnitudeError):
    """Operation requires a nondiscrete model."""


class InexactModelError(MagnitudeError):
    """Operation requires an exact-order model (nat or rat)."""


class NotSymmetricError(MagnitudeError):
    """Quotients exist only in symmetric models."""


class NoUnitError(MagnitudeError):
    """Operation requires a model with a designated unit."""


class UnsupportedCodomainError(MagnitudeError):
    """The requested embedding signature has no representable mapping."""


class NotAboveOneError(MagnitudeError):
    """Value could not be certified strictly greater than one."""


class OracleFailureError(MagnitudeError):
    """A refinement oracle could not reach the requested width in budget."""


class UndecidedError(MagnitudeError):
    """Comparison stayed uncertified at the policy's precision limit."""
