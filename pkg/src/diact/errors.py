"""Exception hierarchy.

Every error raised by the library derives from :class:`DiactError`; the CLI
maps the subclasses onto exit codes.
"""


class DiactError(Exception):
    """Base class for all library errors."""


class DimensionError(DiactError, ValueError):
    """Operand shapes are incompatible."""


class SingularMatrixError(DiactError, ArithmeticError):
    """A pivot fell below the singularity threshold during factorisation."""


class ValidationError(DiactError, ValueError):
    """Input data violates a structural invariant (sign, finiteness, zero output)."""


class ViabilityError(ValidationError):
    """The coefficient matrix has spectral radius >= 1."""


class UnsupportedCombinationError(DiactError, ValueError):
    """A kind/frame pairing that the model does not define."""


class SeriesNotConvergedError(DiactError, ArithmeticError):
    """The truncated power series did not reach the tolerance within the term cap."""


class CsvFormatError(DiactError, ValueError):
    """A matrix or vector CSV file could not be parsed."""


class UnknownFixtureError(DiactError, KeyError):
    """Requested fixture name is not in the catalog."""


class MissingPublishedError(DiactError, KeyError):
    """The fixture carries no published matrix for the requested kind and frame."""
