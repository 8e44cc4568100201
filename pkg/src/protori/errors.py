"""Exception hierarchy for domain errors."""


class ProtoriError(Exception):
    """Base class for every domain error raised by this package."""


class InvalidPrime(ProtoriError, ValueError):
    pass


class InvalidExponent(ProtoriError, ValueError):
    pass


class InvalidScalar(ProtoriError, ValueError):
    """A scalar argument was zero or negative."""


class MismatchedBase(ProtoriError, ValueError):
    """Two lattice elements live over different base subgroups."""


class NotContained(ProtoriError, ValueError):
    pass


class NotTorusFree(ProtoriError, ValueError):
    pass


class DimMismatch(ProtoriError, ValueError):
    pass


class InvalidDescriptor(ProtoriError, ValueError):
    pass
