"""Formula-independent ground truth for the moment routes.

The exact oracle expands Laguerre products into monomials and integrates
each term against ``int_0^inf e^-x x^t dx = Gamma(t+1)``.  Apart from the
gamma integral it relies only on polynomial algebra, so it arbitrates any
disagreement between the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np
from scipy.special import roots_genlaguerre

from .errors import DivergentMoment, NoConvergence, PreconditionViolated
from .exact import ExactValue, HalfInteger, as_rational, gamma_exact, gamma_ratio, pochhammer
from .polys import hyp_terminating, laguerre_coefficients

__all__ = [
    "LaguerreMomentQuery",
    "laguerre_moment_exact",
    "j_integral_formula",
    "ho_expval_oracle",
    "hydrogen_expval_oracle",
    "quadrature_float",
    "ho_expval_quadrature",
    "hydrogen_expval_quadrature",
]


@dataclass(frozen=True)
class LaguerreMomentQuery:
    """``int_0^inf e^-x x^exponent_a L_deg1^alpha(x) L_deg2^beta(x) dx``."""

    deg1: int
    deg2: int
    alpha: Fraction
    beta: Fraction
    exponent_a: HalfInteger

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "beta", as_rational(self.beta))
        object.__setattr__(self, "exponent_a", HalfInteger.of(self.exponent_a))


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def laguerre_moment_exact(q: LaguerreMomentQuery) -> ExactValue:
    a = q.exponent_a
    if a.twice_value <= -2:
        raise DivergentMoment(f"integrand x^{a} is not integrable at the origin")
    product = _poly_mul(laguerre_coefficients(q.deg1, q.alpha), laguerre_coefficients(q.deg2, q.beta))
    # every term shares the same power of sqrt(pi), so pull Gamma(a+1) out front
    base = gamma_exact(a + 1)
    total = Fraction(0)
    for i, c in enumerate(product):
        if c:
            total += c * pochhammer(a.value + 1, i)
    return base * total


def j_integral_formula(n1: int, m1: int, alpha, beta, s) -> ExactValue:
    """Closed form of ``int e^-x x^(alpha+s) L_n1^alpha L_m1^beta dx`` for n1 >= m1.

    1/Gamma(s-n1+m1+1) is taken as zero at its poles, which makes the whole
    value vanish there.
    """
    if n1 < m1:
        raise PreconditionViolated(f"need n1 >= m1, got n1={n1}, m1={m1}")
    alpha, beta, s = as_rational(alpha), as_rational(beta), as_rational(s)
    d = n1 - m1
    # Gamma(s+1)/Gamma(s-d+1) = (s-d+1)_d stays finite through the poles of
    # either gamma and is zero exactly when 1/Gamma(s-d+1) is
    ratio_s = pochhammer(s - d + 1, d)
    if ratio_s == 0:
        return ExactValue(0)
    lead = gamma_exact(alpha + s + 1) * gamma_ratio(beta + m1 + 1, beta + 1)
    coeff = Fraction((-1) ** d) * ratio_s / (math.factorial(m1) * math.factorial(d))
    series = hyp_terminating(upper=(-m1, s + 1, beta - alpha - s), lower=(beta + 1, d + 1))
    return lead * coeff * series


def ho_expval_oracle(state, p: int) -> ExactValue:
    """<r^p> for an oscillator state by termwise integration in xi = r^2."""
    if not state.converges(p):
        raise DivergentMoment(f"<r^{p}> diverges: need p + n + 2K > 0")
    k, alpha = state.k, state.alpha
    a = HalfInteger(int(p) + 2 * state.K + state.n_dim - 2)
    integral = laguerre_moment_exact(LaguerreMomentQuery(k, k, alpha, alpha, a))
    norm = ExactValue(math.factorial(k)) / gamma_exact(alpha + k + 1)
    return norm * integral


def hydrogen_expval_oracle(state, q: int) -> Fraction:
    """<r^q> for a hydrogen state as a ratio of two exact radial integrals."""
    n, l = state.n, state.l
    if q + 2 * l + 3 <= 0:
        raise DivergentMoment(f"<r^{q}> diverges for l={l}: need q + 2l + 3 > 0")
    k = n - l - 1
    alpha = 2 * l + 1
    num = laguerre_moment_exact(LaguerreMomentQuery(k, k, alpha, alpha, q + 2 * l + 2))
    den = laguerre_moment_exact(LaguerreMomentQuery(k, k, alpha, alpha, 2 * l + 2))
    ratio = num / den
    assert ratio.sqrtpi_exp == 0
    return ratio.coeff * (n * state.a0 / (2 * state.Z)) ** q


def quadrature_float(
    integrand: Callable[[np.ndarray], np.ndarray],
    tol: float = 1e-12,
    alpha: float = 0.0,
    start: int = 16,
    max_nodes: int = 512,
) -> float:
    """``int_0^inf f(x) dx`` by generalized Gauss-Laguerre rules of doubling size.

    The rule integrates ``x^alpha e^-x g(x)`` with ``g = f e^x x^-alpha``; pick
    ``alpha`` to absorb the integrand's behaviour at the origin.  Stops when two
    successive estimates agree to ``tol`` relative to the integral of ``|f|``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    previous = None
    n = start
    while n <= max_nodes:
        x, w = roots_genlaguerre(n, alpha)
        f = np.asarray(integrand(x), dtype=float)
        # divide out the weight in log space: f underflows where e^x overflows
        with np.errstate(divide="ignore"):
            g = np.sign(f) * np.exp(np.log(np.abs(f)) + x - alpha * np.log(x))
        estimate = float(np.dot(w, g))
        # relative to the integral of |f|, so cancelling integrands still terminate
        scale = max(abs(estimate), float(np.dot(w, np.abs(g))), 1e-300)
        if previous is not None and abs(estimate - previous) <= tol * scale:
            return estimate
        previous = estimate
        n *= 2
    raise NoConvergence(f"no agreement to {tol:g} with {max_nodes} nodes (last estimate {previous!r})")


def ho_expval_quadrature(state, p: float, tol: float = 1e-12) -> float:
    """<r^p> by quadrature of ``r^(p+n-1) R_NK(r)^2`` after r = sqrt(xi)."""
    from .oscillator import radial_eval

    radial = np.vectorize(lambda r: radial_eval(state, r))

    def integrand(xi):
        r = np.sqrt(xi)
        return 0.5 * r ** (p + state.n_dim - 2) * radial(r) ** 2

    return quadrature_float(integrand, tol, alpha=p / 2 + state.K + state.n_dim / 2 - 1)


def hydrogen_expval_quadrature(state, q: float, tol: float = 1e-12) -> float:
    """<r^q> by quadrature of ``R_nl(r)^2 r^(q+2)`` in rho = 2Zr/(n a0)."""
    from .hydrogen import radial_eval_hydrogen

    scale = float(state.n * state.a0 / (2 * state.Z))
    radial = np.vectorize(lambda r: radial_eval_hydrogen(state, r))

    def integrand(rho):
        r = rho * scale
        return scale * radial(r) ** 2 * r ** (q + 2)

    return quadrature_float(integrand, tol, alpha=q + 2 * state.l + 2)
