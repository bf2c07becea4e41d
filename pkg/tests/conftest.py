import sys
from fractions import Fraction

import pytest
import sympy as sp

from radmoments.exact import ExactValue


def sympy_ho_moment(n_dim, N, K, p):
    """<r^p> by symbolic integration of r^(p+n-1) R_NK(r)^2, independent of every library route."""
    r = sp.Symbol("r", positive=True)
    k = (N - K) // 2
    alpha = sp.Rational(2 * K + n_dim - 2, 2)
    norm2 = 2 * sp.factorial(k) / sp.gamma(sp.Rational(N + K + n_dim, 2))
    radial2 = norm2 * sp.exp(-(r**2)) * r ** (2 * K) * sp.expand_func(sp.assoc_laguerre(k, alpha, r**2)) ** 2
    return sp.nsimplify(sp.simplify(sp.integrate(sp.expand(r ** (p + n_dim - 1) * radial2), (r, 0, sp.oo))))


def sympy_to_exact(expr) -> ExactValue:
    """Split q * sqrt(pi)^k into an ExactValue."""
    expr = sp.nsimplify(expr)
    for k in (0, 1, -1, 2, -2):
        q = sp.simplify(expr / sp.sqrt(sp.pi) ** k)
        if q.is_Rational:
            return ExactValue(Fraction(int(q.p), int(q.q)), k)
    raise AssertionError(f"{expr} is not a rational multiple of a power of sqrt(pi)")


@pytest.fixture
def sympy_oracle():
    return lambda *args: sympy_to_exact(sympy_ho_moment(*args))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
