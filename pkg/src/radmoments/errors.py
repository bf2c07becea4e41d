"""Exception hierarchy shared by every module."""


class RadMomentsError(Exception):
    """Base class for all errors raised by radmoments."""


class NonPositiveArgument(RadMomentsError, ValueError):
    """Gamma evaluated at zero or a negative half-integer."""


class MixedPowerError(RadMomentsError, ArithmeticError):
    """Addition of two ExactValues carrying different powers of sqrt(pi)."""


class NonTerminating(RadMomentsError, ValueError):
    """Hypergeometric series without a nonpositive-integer upper parameter."""


class LowerParameterPole(RadMomentsError, ZeroDivisionError):
    """A lower Pochhammer symbol vanishes before the series terminates."""


class DivergentMoment(RadMomentsError, ValueError):
    """The radial integral defining the moment diverges at the origin."""


class InvalidState(RadMomentsError, ValueError):
    """Quantum numbers violate the state invariants."""


class PreconditionViolated(RadMomentsError, ValueError):
    pass


class NoConvergence(RadMomentsError, RuntimeError):
    """Quadrature reached its node cap without meeting the tolerance."""
