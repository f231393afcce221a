"""Exception types raised across the package."""


class EntSphereError(Exception):
    """Base class for all package errors."""


class NonHermitianInput(EntSphereError, ValueError):
    pass


class InvalidDensity(EntSphereError, ValueError):
    pass


class InvalidBasis(EntSphereError, ValueError):
    pass


class InvalidSchmidtForm(EntSphereError, ValueError):
    pass


class InvalidState(EntSphereError, ValueError):
    pass


class DomainError(EntSphereError, ValueError):
    """Argument outside the domain where a closed-form law is defined."""


class ZeroProbabilityBranch(DomainError):
    """A measurement branch has (numerically) zero probability, so it has no
    normalizable partner state."""


class ParseError(EntSphereError, ValueError):
    pass
