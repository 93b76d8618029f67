"""Exception hierarchy.

Everything raised for bad input derives from :class:`InputError` (CLI exit 1);
:class:`InconsistencyError` means two independent computations disagreed
(CLI exit 2).
"""


class PolyballError(Exception):
    pass


class InputError(PolyballError, ValueError):
    pass


class DimensionError(InputError):
    pass


class DependentBasisError(InputError):
    pass


class ZeroComponentError(InputError):
    pass


class NotOnSphereError(InputError):
    pass


class NotInBallError(InputError):
    pass


class PreconditionError(InputError):
    pass


class NotABallError(InputError):
    """Extreme-point input does not span the space."""


class NotExtremeError(InputError):
    """A supplied point is not extreme in the hull of the others."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class InconsistencyError(PolyballError):
    """Two independent routes to the same quantity disagree."""
