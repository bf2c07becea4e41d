"""Radial moments <r^q> of nonrelativistic hydrogenlike bound states.

Values are exact rationals; the nuclear charge ``Z`` and Bohr radius ``a0``
are carried as rationals so that unit changes never introduce rounding.

Positive-side moments <r^(k-1)> come from the discrete Chebyshev polynomial
t_k(n-l-1, -2l-1).  Negative-side moments <r^(-k-2)>, 0 <= k <= 2l, come from
the Pasternack inversion; the ``paper-literal`` mode reproduces the alternative
printed closed form, which is off by the factor (2l+k+1)!/(2l-k)!.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .errors import DivergentMoment, InvalidState
from .exact import as_rational
from .polys import chebyshev_t, laguerre_float

__all__ = [
    "HydrogenState",
    "expval_pos",
    "expval_neg",
    "inversion_in4",
    "kramers_pasternack_range",
    "moment",
    "radial_eval_hydrogen",
]

NegMode = Literal["consistent", "paper-literal"]


@dataclass(frozen=True)
class HydrogenState:
    n: int
    l: int  # noqa: E741
    Z: Fraction = Fraction(1)
    a0: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "Z", as_rational(self.Z))
        object.__setattr__(self, "a0", as_rational(self.a0))
        if self.n < 1:
            raise InvalidState(f"principal quantum number must be positive, got n={self.n}")
        if not 0 <= self.l <= self.n - 1:
            raise InvalidState(f"need 0 <= l <= n-1 (n={self.n}, l={self.l})")
        if self.Z <= 0 or self.a0 <= 0:
            raise InvalidState("Z and a0 must be positive")

    @property
    def length_scale(self) -> Fraction:
        """n a0 / (2Z)."""
        return self.n * self.a0 / (2 * self.Z)

    def converges(self, q: int) -> bool:
        return q + 2 * self.l + 3 > 0


def _t(state: HydrogenState, k: int) -> Fraction:
    return chebyshev_t(k, state.n - state.l - 1, -2 * state.l - 1)


def expval_pos(state: HydrogenState, k: int) -> Fraction:
    """<r^(k-1)> for k = 0, 1, 2, ..."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return Fraction(1, 2 * state.n) * state.length_scale ** (k - 1) * _t(state, k)


def _require_inside(state: HydrogenState, k: int) -> None:
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > 2 * state.l:
        raise DivergentMoment(f"<r^{-k - 2}> diverges for l={state.l}: need k <= 2l")


def inversion_in4(state: HydrogenState, k: int) -> Fraction:
    """<r^(-k-2)> from <r^(k-1)> by Pasternack inversion, 0 <= k <= 2l."""
    _require_inside(state, k)
    l = state.l  # noqa: E741
    return (
        state.length_scale ** (-(2 * k + 1))
        * Fraction(math.factorial(2 * l - k), math.factorial(2 * l + k + 1))
        * expval_pos(state, k)
    )


def expval_neg(state: HydrogenState, k: int, mode: NegMode = "consistent") -> Fraction:
    """<r^(-k-2)>, 0 <= k <= 2l.

    ``consistent`` (default) agrees with direct integration.  ``paper-literal``
    evaluates (1/2n)(2Z/(n a0))^(k+2) t_k(n-l-1, -2l-1) and is correct only
    when (2l+k+1)!/(2l-k)! = 1.
    """
    _require_inside(state, k)
    if mode == "consistent":
        return inversion_in4(state, k)
    if mode == "paper-literal":
        return Fraction(1, 2 * state.n) * state.length_scale ** (-(k + 2)) * _t(state, k)
    raise ValueError(f"unknown mode {mode!r}")


def kramers_pasternack_range(state: HydrogenState, k_max: int) -> list[tuple[int, Fraction]]:
    """[(k, <r^k>) for k = 1..k_max] from the Kramers-Pasternack recurrence."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    n, l = state.n, state.l  # noqa: E741
    s = state.length_scale
    before, prev = state.Z / (state.a0 * n * n), Fraction(1)
    out = []
    for k in range(1, k_max + 1):
        cur = (
            Fraction(2 * n * (2 * k + 1), k + 1) * s * prev
            - Fraction(k * ((2 * l + 1) ** 2 - k * k), k + 1) * s * s * before
        )
        out.append((k, cur))
        before, prev = prev, cur
    return out


def moment(state: HydrogenState, q: int, mode: NegMode = "consistent") -> Fraction:
    """<r^q> for any convergent integer power q."""
    if not state.converges(q):
        raise DivergentMoment(f"<r^{q}> diverges for l={state.l}: need q >= -2l-2")
    if q >= -1:
        return expval_pos(state, q + 1)
    return expval_neg(state, -q - 2, mode)


def radial_eval_hydrogen(state: HydrogenState, r: float) -> float:
    """Normalized R_nl(r) with ``int R^2 r^2 dr = 1``."""
    n, l = state.n, state.l  # noqa: E741
    k = n - l - 1
    scale = float(2 * state.Z / (n * state.a0))
    rho = scale * r
    # N^2 = scale^3 k! / (2n (n+l)!)
    log_norm = 0.5 * (3 * math.log(scale) + math.lgamma(k + 1) - math.log(2 * n) - math.lgamma(n + l + 1))
    return math.exp(log_norm - rho / 2) * rho**l * laguerre_float(k, 2 * l + 1, rho)
