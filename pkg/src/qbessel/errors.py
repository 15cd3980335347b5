"""Exception types shared across the library."""


class QBesselError(Exception):
    """Base class for all library-specific errors."""


class DomainError(QBesselError, ValueError):
    """An argument lies outside the domain on which an operation is defined."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole (e.g. gamma at 0, -1, -2, ...)."""


class SeriesDivergence(QBesselError, ArithmeticError):
    """A series was requested outside its region of convergence."""


class ToleranceNotMet(QBesselError, ArithmeticError):
    """An iterative evaluation hit its iteration cap before converging."""


class NoCancellation(QBesselError, ValueError):
    """No numerator/denominator parameter pair matches, so no reduction applies."""


class NoReduction(QBesselError, ValueError):
    """No parameter coincidence allows lowering the order of a G-function."""


class NonGenericParameters(QBesselError, ValueError):
    """Parameters are integer-coincident, so the simple-pole expansion breaks down."""


class NearSingularParameter(QBesselError, ValueError):
    """A parameter sits too close to a removable singularity of a closed form."""


class BranchMismatch(QBesselError, ValueError):
    """The named closed-form branch does not apply to the given parameters."""


class Unsupported(QBesselError, ValueError):
    """The request is valid mathematically but outside this library's scope."""


class DivergentSpec(QBesselError, ValueError):
    """The integral specification fails its convergence test."""


class ParseError(QBesselError, ValueError):
    """A spec string could not be parsed.

    Attributes
    ----------
    position : int or None
        Index into the input where parsing failed, when known.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ValidationError(QBesselError, ValueError):
    """A parsed spec violates a structural invariant."""


# Flat report files are written with ordinary OS calls.
IoError = OSError
