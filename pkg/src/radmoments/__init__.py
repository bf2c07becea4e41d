"""Exact radial moments <r^p> for the n-dimensional oscillator and hydrogen."""

from .errors import (
    DivergentMoment,
    InvalidState,
    LowerParameterPole,
    MixedPowerError,
    NoConvergence,
    NonPositiveArgument,
    NonTerminating,
    PreconditionViolated,
    RadMomentsError,
)
from .exact import ExactValue, HalfInteger, Rational, gamma_exact, gamma_ratio, pochhammer, to_float
from .hydrogen import HydrogenState
from .oscillator import MomentRecord, OscillatorState

__version__ = "0.1.0"
