"""Exception hierarchy shared by all modules."""


class ImmvarError(Exception):
    """Base class for library errors."""


class InvalidPermutationError(ImmvarError, ValueError):
    pass


class ConductorMismatchError(ImmvarError, ValueError):
    pass


class NotAHomomorphismError(ImmvarError, ValueError):
    pass


class NotAClassFunctionError(ImmvarError, ValueError):
    pass


class NotOneDimensionalError(ImmvarError, ValueError):
    pass


class NotInImageError(ImmvarError, ValueError):
    """A tensor is not fixed by the idempotent it was checked against."""


class BoundExceededError(ImmvarError):
    """An enumeration or work bound was exceeded."""


class ZeroProjectionError(ImmvarError, ValueError):
    """The idempotent kills the given tensor, so it has no support."""
