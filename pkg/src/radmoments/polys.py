"""Terminating hypergeometric series and the polynomial families built on them.

Everything here is evaluated in exact rational arithmetic.  The families are

* Laguerre ``L_k^alpha(x)``,
* Hahn ``h_k^(alpha, beta)(x, N)`` on the linear grid, with the discrete
  Chebyshev polynomials ``t_k(x, N) = h_k^(0,0)(x, N)`` as a special case,
* dual Hahn ``w_m^(c)(s(s+1), a, b)`` on the quadratic grid ``x(s) = s(s+1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import LowerParameterPole, NonTerminating
from .exact import as_rational, pochhammer

__all__ = [
    "HypSeriesSpec",
    "DualHahnParams",
    "hyp_terminating",
    "laguerre",
    "laguerre_recurrence",
    "laguerre_float",
    "laguerre_coefficients",
    "hahn",
    "chebyshev_t",
    "dual_hahn",
    "dual_hahn_equation_residual",
]


def _nonpositive_int(q: Fraction) -> bool:
    return q.denominator == 1 and q <= 0


@dataclass(frozen=True)
class HypSeriesSpec:
    """Parameters of ``pFq(upper; lower; argument)`` for a terminating series."""

    upper: tuple = field(default_factory=tuple)
    lower: tuple = field(default_factory=tuple)
    argument: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(as_rational(u) for u in self.upper))
        object.__setattr__(self, "lower", tuple(as_rational(b) for b in self.lower))
        object.__setattr__(self, "argument", as_rational(self.argument))

    @property
    def length(self) -> int:
        """Index J of the last possibly-nonzero term."""
        stops = [-u for u in self.upper if _nonpositive_int(u)]
        if not stops:
            raise NonTerminating(f"no nonpositive integer among upper parameters {self.upper}")
        return int(min(stops))


def hyp_terminating(spec: HypSeriesSpec | None = None, *, upper=(), lower=(), argument=1) -> Fraction:
    """Exact value of a terminating generalized hypergeometric series.

    Either pass a :class:`HypSeriesSpec` or the ``upper``/``lower``/``argument``
    keywords.  Terms are accumulated by their consecutive ratio.

    >>> hyp_terminating(upper=[-1, 3], lower=[5])
    Fraction(2, 5)
    """
    if spec is None:
        spec = HypSeriesSpec(tuple(upper), tuple(lower), argument)
    J = spec.length
    z = spec.argument
    term = Fraction(1)
    total = Fraction(1)
    for j in range(J):
        num = Fraction(1)
        for u in spec.upper:
            num *= u + j
        if num == 0:
            break
        den = Fraction(j + 1)
        for b in spec.lower:
            if b + j == 0:
                raise LowerParameterPole(
                    f"lower parameter {b} makes term {j + 1} singular (series runs to {J})"
                )
            den *= b + j
        term = term * num * z / den
        total += term
    return total


def laguerre_coefficients(k: int, alpha) -> list[Fraction]:
    """Monomial coefficients ``c_0..c_k`` of ``L_k^alpha``."""
    alpha = as_rational(alpha)
    return [
        (-1) ** i * pochhammer(alpha + i + 1, k - i) / (math.factorial(k - i) * math.factorial(i))
        for i in range(k + 1)
    ]


def laguerre_recurrence(k: int, alpha, x) -> Fraction:
    """``L_k^alpha(x)`` from the three-term recurrence in the degree."""
    alpha = as_rational(alpha)
    x = as_rational(x)
    prev, cur = Fraction(0), Fraction(1)
    for j in range(k):
        prev, cur = cur, ((2 * j + 1 + alpha - x) * cur - (j + alpha) * prev) / (j + 1)
    return cur


def laguerre_float(k: int, alpha: float, x: float) -> float:
    prev, cur = 0.0, 1.0
    for j in range(k):
        prev, cur = cur, ((2 * j + 1 + alpha - x) * cur - (j + alpha) * prev) / (j + 1)
    return cur


def laguerre(k: int, alpha, x) -> Fraction:
    """Exact ``L_k^alpha(x)``."""
    return laguerre_recurrence(k, alpha, x)


def hahn(k: int, alpha, beta, x, Nparam) -> Fraction:
    """Hahn polynomial ``h_k^(alpha, beta)(x, N)``.

    The factor Gamma(N)/Gamma(N-k) is the finite product (N-1)...(N-k), which
    stays meaningful at the negative integers N where both gammas have poles.
    """
    alpha, beta, x, N = (as_rational(v) for v in (alpha, beta, x, Nparam))
    ratio = Fraction(1)
    for j in range(1, k + 1):
        ratio *= N - j
    pref = (-1) ** k * ratio * pochhammer(beta + 1, k) / math.factorial(k)
    if pref == 0:
        return Fraction(0)
    series = hyp_terminating(upper=(-k, alpha + beta + k + 1, -x), lower=(beta + 1, 1 - N))
    return pref * series


def chebyshev_t(k: int, x, Nparam) -> Fraction:
    """Discrete Chebyshev polynomial ``t_k(x, N)``."""
    return hahn(k, 0, 0, x, Nparam)


@dataclass(frozen=True)
class DualHahnParams:
    """Parameters of ``w_m^(c)(s(s+1), a, b)``.

    No orthogonality window is imposed; the oscillator moments use b <= 1/2.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    m: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.m < 0:
            raise ValueError("degree m must be nonnegative")

    def sigma(self, s: Fraction) -> Fraction:
        return (s - self.a) * (s + self.b) * (s - self.c)


def dual_hahn(params: DualHahnParams, s) -> Fraction:
    """Dual Hahn polynomial evaluated at grid point ``x(s) = s(s+1)``."""
    a, b, c, m = params.a, params.b, params.c, params.m
    s = as_rational(s)
    pref = pochhammer(1 + a - b, m) * pochhammer(1 + a + c, m) / math.factorial(m)
    series = hyp_terminating(upper=(-m, a - s, a + s + 1), lower=(1 + a - b, 1 + a + c))
    return pref * series


def dual_hahn_equation_residual(
    params: DualHahnParams, s, y: Callable[[Fraction], Fraction] | None = None
) -> Fraction:
    """Left side of the dual Hahn difference equation written as a recurrence in s.

    Zero for every rational s when ``y`` is the dual Hahn polynomial itself
    (the default).  Passing another ``y`` lets callers check the residual is
    not vacuous.
    """
    s = as_rational(s)
    if y is None:
        y = lambda t: dual_hahn(params, t)  # noqa: E731
    lam = params.m
    nabla_x = 2 * s
    delta_x = 2 * s + 2
    nabla_x1 = 2 * s + 1
    sig = params.sigma(s)
    sig_reflected = params.sigma(-s - 1)
    return (
        sig_reflected * nabla_x * y(s + 1)
        + sig * delta_x * y(s - 1)
        + (lam * delta_x * nabla_x * nabla_x1 - sig_reflected * nabla_x - sig * delta_x) * y(s)
    )


def finite_differences(values: Sequence[Fraction], order: int) -> list[Fraction]:
    """Forward differences of the given order on a unit-spaced table."""
    vals = list(values)
    for _ in range(order):
        vals = [b - a for a, b in zip(vals, vals[1:])]
    return vals
