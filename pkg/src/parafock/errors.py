"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates a documented precondition."""


class ShapeError(DomainError):
    """A pattern's rows do not have the required ragged shape."""


class TableDepthError(RuntimeError):
    """A reduced-matrix-element table is too shallow for the requested action."""


class InternalConsistencyError(RuntimeError):
    """An algebraic identity that must hold for valid inputs failed.

    Raised e.g. on a vanishing denominator in a coupling-coefficient formula
    or an inconsistent matrix-element system; both signal a convention fault,
    not bad user input.
    """
