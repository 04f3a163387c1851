"""Exception types shared across the package."""


class MeroboundsError(Exception):
    """Base class for every error this package raises deliberately."""


class BadParameter(MeroboundsError, ValueError):
    """A scalar argument lies outside its documented domain."""


class BadRadius(BadParameter):
    """A radius argument lies outside (0, 1]."""


class RadiusBeyondPole(BadParameter):
    """A radius reaches or passes the pole, leaving the validity disk."""


class NearZeroConstantTerm(MeroboundsError, ArithmeticError):
    """Series reciprocal requested for a constant term too close to zero."""


class OrderUnderflow(MeroboundsError, ValueError):
    """More derivatives requested than the truncation order supports."""


class PoleMismatch(MeroboundsError, ValueError):
    """The declared pole is not a root of the stored z/f series."""


class PoleInDomain(MeroboundsError, ValueError):
    """The integration region contains, or nearly contains, a singularity."""


class CircleThroughPole(MeroboundsError, ValueError):
    """An integration circle passes through the guard band around a pole."""


class NoPole(MeroboundsError, ValueError):
    """The operation requires a function with a declared pole."""


class ClassMismatch(MeroboundsError, ValueError):
    """Function data is inconsistent with the asserted function class."""
