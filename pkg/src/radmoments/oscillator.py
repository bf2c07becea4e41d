"""Radial moments <r^p> of the n-dimensional isotropic harmonic oscillator.

Natural units (hbar = m = omega = 1).  A state is labelled by the dimension
``n_dim``, the principal number ``N`` and the hyperangular number ``K`` with
``N - K = 2k`` even.  Four independent routes to <r^p> are provided:

``closed``      Gamma-ratio times a terminating 3F2 in the moment index,
``dual-hahn``   the same moment as a dual Hahn polynomial on the grid s(s+1),
``recurrence``  the three-term recurrence p-2 -> p -> p+2,
``inversion``   the reflection p -> -p-2 of the quadratic grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .errors import DivergentMoment, InvalidState
from .exact import ExactValue, HalfInteger, as_rational, gamma_ratio, to_float
from .polys import DualHahnParams, dual_hahn, hyp_terminating, laguerre_float

__all__ = [
    "OscillatorState",
    "MomentRecord",
    "energy",
    "radial_eval",
    "expval_closed",
    "expval_closed_real",
    "expval_dual_hahn",
    "recurrence_coefficient",
    "recurrence_step",
    "expval_recurrence_range",
    "inversion_partner",
    "METHODS",
]

METHODS = ("closed", "dual-hahn", "recurrence", "inversion", "oracle-exact", "oracle-quadrature")

Mode = Literal["derived", "paper-literal"]


@dataclass(frozen=True)
class OscillatorState:
    n_dim: int
    N: int
    K: int

    def __post_init__(self):
        if self.n_dim < 1:
            raise InvalidState(f"dimension must be positive, got n={self.n_dim}")
        if self.N < 0 or self.K < 0:
            raise InvalidState("N and K must be nonnegative")
        if self.K > self.N:
            raise InvalidState(f"K must not exceed N (N={self.N}, K={self.K})")
        if (self.N - self.K) % 2:
            raise InvalidState(f"N-K must be even (N={self.N}, K={self.K})")

    @property
    def k(self) -> int:
        """Laguerre degree (N-K)/2."""
        return (self.N - self.K) // 2

    @property
    def alpha(self) -> Fraction:
        """Laguerre parameter K + n/2 - 1."""
        return Fraction(2 * self.K + self.n_dim - 2, 2)

    @property
    def nonphysical(self) -> bool:
        # a one-dimensional oscillator has only K = 0 (even) and K = 1 (odd) parity sectors
        return self.n_dim == 1 and self.K >= 2

    def converges(self, p) -> bool:
        return p + self.n_dim + 2 * self.K > 0

    def min_power(self, parity: int) -> int:
        """Smallest convergent integer p with p % 2 == parity."""
        p = -(self.n_dim + 2 * self.K) + 1
        if p % 2 != parity % 2:
            p += 1
        return p


@dataclass(frozen=True)
class MomentRecord:
    state: OscillatorState
    p: object
    method: str
    exact: ExactValue | None
    float: float
    flags: tuple = field(default_factory=tuple)


def _require_convergent(state: OscillatorState, p) -> None:
    if not state.converges(p):
        raise DivergentMoment(
            f"<r^{p}> diverges for n={state.n_dim}, K={state.K}: need p + n + 2K > 0"
        )


def energy(state: OscillatorState) -> Fraction:
    """E_N = N + n/2."""
    return state.N + Fraction(state.n_dim, 2)


def radial_eval(state: OscillatorState, r: float) -> float:
    """Normalized radial function R_NK(r); ``int R^2 r^(n-1) dr = 1``."""
    k, alpha = state.k, state.alpha
    log_norm = 0.5 * (math.log(2.0) + math.lgamma(k + 1) - math.lgamma((state.N + state.K + state.n_dim) / 2))
    lag = laguerre_float(k, float(alpha), r * r)
    return math.exp(log_norm - r * r / 2) * r**state.K * lag


def expval_closed(state: OscillatorState, p: int) -> ExactValue:
    """<r^p> as Gamma(K+(n+p)/2)/Gamma(K+n/2) times a terminating 3F2."""
    _require_convergent(state, p)
    p = int(p)
    half_p = Fraction(p, 2)
    prefactor = gamma_ratio(HalfInteger(2 * state.K + state.n_dim + p), HalfInteger(2 * state.K + state.n_dim))
    series = hyp_terminating(
        upper=(Fraction(state.K - state.N, 2), half_p + 1, -half_p),
        lower=(state.alpha + 1, 1),
    )
    return prefactor * series


def expval_closed_real(state: OscillatorState, p: float) -> float:
    """Floating-point evaluation of the closed form for real p."""
    if not state.converges(p):
        raise DivergentMoment(f"<r^{p}> diverges: need p + n + 2K > 0")
    p = float(p)
    b = state.K + state.n_dim / 2
    log_pref = math.lgamma(b + p / 2) - math.lgamma(b)
    upper = (-state.k, p / 2 + 1, -p / 2)
    terms = [1.0]
    term = 1.0
    for j in range(state.k):
        term *= (upper[0] + j) * (upper[1] + j) * (upper[2] + j) / ((b + j) * (j + 1) * (j + 1))
        terms.append(term)
    return math.exp(log_pref) * math.fsum(terms)


def expval_dual_hahn(state: OscillatorState, p: int) -> ExactValue:
    """<r^p> through the dual Hahn polynomial w_k^(0)(s(s+1), 0, 1-K-n/2), s = p/2."""
    _require_convergent(state, p)
    p = int(p)
    prefactor = gamma_ratio(
        HalfInteger(2 * state.K + state.n_dim + p),
        HalfInteger(state.N + state.K + state.n_dim),
    )
    params = DualHahnParams(a=0, b=1 - state.K - Fraction(state.n_dim, 2), c=0, m=state.k)
    return prefactor * dual_hahn(params, Fraction(p, 2))


def recurrence_coefficient(state: OscillatorState, p: int, mode: Mode = "derived") -> Fraction:
    """Coefficient of <r^(p-2)> in (p+2)<r^(p+2)> = (p+1)(2N+n)<r^p> + C(p)<r^(p-2)>.

    ``derived`` follows from the dual Hahn difference equation and equals
    p(p^2 - (2K+n-2)^2)/4.  ``paper-literal`` carries (K-1)(K+p-1) where the
    derived form has (K-1)(K+n-1); the two agree only when p = n or K = 1.
    """
    n, K = state.n_dim, state.K
    p = Fraction(p)
    if mode == "derived":
        inner = (K - 1) * (K + n - 1)
    elif mode == "paper-literal":
        inner = (K - 1) * (K + p - 1)
    else:
        raise ValueError(f"unknown recurrence mode {mode!r}")
    return p * ((p * p - n * n) / 4 - inner)


def recurrence_step(
    state: OscillatorState, p: int, prev: ExactValue, prev2: ExactValue | None, mode: Mode = "derived"
) -> ExactValue:
    """<r^(p+2)> from prev = <r^p> and prev2 = <r^(p-2)>.

    ``prev2`` may be None when its coefficient vanishes (p = 0).
    """
    if p + 2 == 0:
        raise ZeroDivisionError("the recurrence cannot produce <r^0> from below; use <1> = 1")
    prev = ExactValue.coerce(prev)
    c = recurrence_coefficient(state, p, mode)
    out = (p + 1) * (2 * state.N + state.n_dim) * prev
    if c != 0:
        if prev2 is None:
            raise ValueError(f"<r^{p - 2}> is required at p={p}")
        out = out + c * ExactValue.coerce(prev2)
    return out / (p + 2)


def _descend(state: OscillatorState, p: int, upper: ExactValue, mid: ExactValue, mode: Mode) -> ExactValue:
    """<r^(p-2)> from <r^(p+2)> and <r^p>, solving the recurrence backwards."""
    c = recurrence_coefficient(state, p, mode)
    if c == 0:
        raise ZeroDivisionError(f"recurrence coefficient vanishes at p={p}; cannot descend")
    return ((p + 2) * upper - (p + 1) * (2 * state.N + state.n_dim) * mid) / c


def _chain(state: OscillatorState, parity: int, p_lo: int, p_hi: int, mode: Mode) -> dict[int, ExactValue]:
    values: dict[int, ExactValue] = {}
    if parity == 0:
        values[0] = ExactValue(1)
        if state.converges(-2):
            values[-2] = ExactValue(Fraction(1) / state.alpha)
        top = 0
    else:
        # with <r^-1> divergent the p=1 step is 0*inf, not 0: seed one step higher
        lo = -1 if state.converges(-1) else 1
        values[lo] = expval_closed(state, lo)
        values[lo + 2] = expval_closed(state, lo + 2)
        top = lo + 2
    while top < p_hi:
        values[top + 2] = recurrence_step(state, top, values[top], values.get(top - 2), mode)
        top += 2
    bottom = min(values)
    while bottom > p_lo:
        values[bottom - 2] = _descend(state, bottom, values[bottom + 2], values[bottom], mode)
        bottom -= 2
    return values


def expval_recurrence_range(
    state: OscillatorState, p_min: int, p_max: int, mode: Mode = "derived"
) -> list[MomentRecord]:
    """Moments for every integer p in [p_min, p_max] generated by the recurrence.

    Even p start from <1> = 1 and <r^-2> = 1/(K+n/2-1).  Odd p start from the
    closed-form <r^-1> and <r>, or <r> and <r^3> when <r^-1> diverges.
    """
    if p_min > p_max:
        return []
    _require_convergent(state, p_min)
    flags = _state_flags(state) + (("paper-literal-mode",) if mode == "paper-literal" else ())
    records = []
    chains = {}
    for parity in (0, 1):
        ps = [p for p in range(p_min, p_max + 1) if p % 2 == parity]
        if ps:
            chains[parity] = _chain(state, parity, ps[0], ps[-1], mode)
    for p in range(p_min, p_max + 1):
        value = chains[p % 2][p]
        records.append(MomentRecord(state, p, "recurrence", value, to_float(value), flags))
    return records


def inversion_partner(state: OscillatorState, p: int) -> ExactValue:
    """<r^(-p-2)> from <r^p> by the reflection of the quadratic grid."""
    _require_convergent(state, p)
    _require_convergent(state, -p - 2)
    factor = gamma_ratio(
        HalfInteger(2 * state.K + state.n_dim - p - 2),
        HalfInteger(2 * state.K + state.n_dim + p),
    )
    return factor * expval_closed(state, p)


def _state_flags(state: OscillatorState) -> tuple:
    return ("nonphysical-hyperangular",) if state.nonphysical else ()


def moment(state: OscillatorState, p: int, method: str = "closed", mode: Mode = "derived") -> MomentRecord:
    """Single <r^p> record computed by the named route."""
    flags = _state_flags(state)
    if method == "closed":
        value = expval_closed(state, p)
    elif method == "dual-hahn":
        value = expval_dual_hahn(state, p)
    elif method == "recurrence":
        return expval_recurrence_range(state, p, p, mode)[0]
    elif method == "inversion":
        value = inversion_partner(state, -p - 2)
    elif method == "oracle-exact":
        from .oracle import ho_expval_oracle

        value = ho_expval_oracle(state, p)
    else:
        raise ValueError(f"unknown method {method!r}")
    return MomentRecord(state, p, method, value, to_float(value), flags)
