"""Exact arithmetic: rationals, half-integers and values of the form q * pi**(k/2).

Rationals are :class:`fractions.Fraction`.  Every gamma value at a positive
half-integer is a rational multiple of 1 or sqrt(pi), so the set of
:class:`ExactValue` objects is closed under the gamma-ratio algebra the moment
formulas generate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

import mpmath

from .errors import MixedPowerError, NonPositiveArgument

Rational = Fraction

__all__ = [
    "Rational",
    "HalfInteger",
    "ExactValue",
    "as_rational",
    "pochhammer",
    "gamma_exact",
    "gamma_ratio",
    "to_float",
]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and exact decimal strings ("3/2", "0.5") to Fraction.

    Floats are rejected: silently promoting a binary float would smuggle
    rounding error into an exact computation.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational number")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, HalfInteger):
        return x.value
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


@dataclass(frozen=True, order=True)
class HalfInteger:
    """The number ``twice_value / 2``."""

    twice_value: int

    @classmethod
    def of(cls, x) -> HalfInteger:
        if isinstance(x, HalfInteger):
            return x
        q = as_rational(x) * 2
        if q.denominator != 1:
            raise ValueError(f"{x!r} is not a multiple of 1/2")
        return cls(int(q))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice_value % 2 == 0

    def __add__(self, other):
        return HalfInteger(self.twice_value + HalfInteger.of(other).twice_value)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInteger(self.twice_value - HalfInteger.of(other).twice_value)

    def __str__(self):
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/2"


@dataclass(frozen=True)
class ExactValue:
    """``coeff * pi**(sqrtpi_exp / 2)`` with ``coeff`` rational."""

    coeff: Fraction
    sqrtpi_exp: int = 0

    def __post_init__(self):
        coeff = as_rational(self.coeff)
        object.__setattr__(self, "coeff", coeff)
        if coeff == 0:
            object.__setattr__(self, "sqrtpi_exp", 0)
        else:
            object.__setattr__(self, "sqrtpi_exp", int(self.sqrtpi_exp))

    @classmethod
    def coerce(cls, x) -> ExactValue:
        return x if isinstance(x, ExactValue) else cls(as_rational(x), 0)

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def __mul__(self, other):
        try:
            other = ExactValue.coerce(other)
        except TypeError:
            return NotImplemented
        return ExactValue(self.coeff * other.coeff, self.sqrtpi_exp + other.sqrtpi_exp)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = ExactValue.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by an exact zero")
        return ExactValue(self.coeff / other.coeff, self.sqrtpi_exp - other.sqrtpi_exp)

    def __rtruediv__(self, other):
        try:
            other = ExactValue.coerce(other)
        except TypeError:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return ExactValue(1) / ExactValue(self.coeff**-k, -k * self.sqrtpi_exp)
        return ExactValue(self.coeff**k, k * self.sqrtpi_exp)

    def __neg__(self):
        return ExactValue(-self.coeff, self.sqrtpi_exp)

    def __add__(self, other):
        try:
            other = ExactValue.coerce(other)
        except TypeError:
            return NotImplemented
        # zero carries no power of pi, so it is additive identity for every class
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if self.sqrtpi_exp != other.sqrtpi_exp:
            raise MixedPowerError(
                f"cannot add sqrt(pi)^{self.sqrtpi_exp} and sqrt(pi)^{other.sqrtpi_exp} terms exactly"
            )
        return ExactValue(self.coeff + other.coeff, self.sqrtpi_exp)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = ExactValue.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return ExactValue.coerce(other) - self

    def __eq__(self, other):
        if isinstance(other, ExactValue):
            return self.coeff == other.coeff and self.sqrtpi_exp == other.sqrtpi_exp
        if isinstance(other, (int, Fraction)):
            return self.sqrtpi_exp == 0 and self.coeff == other
        return NotImplemented

    def __hash__(self):
        return hash((self.coeff, self.sqrtpi_exp))

    def __float__(self):
        return to_float(self)

    def __str__(self):
        c = self.coeff
        text = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        if self.sqrtpi_exp == 0:
            return text
        return f"{text}*sqrt(pi)^{self.sqrtpi_exp}"

    def to_fields(self) -> dict:
        """Structured rendering with every field as a decimal string."""
        return {
            "num": str(self.coeff.numerator),
            "den": str(self.coeff.denominator),
            "sqrtpi_exp": str(self.sqrtpi_exp),
        }

    @classmethod
    def from_fields(cls, fields: dict) -> ExactValue:
        return cls(Fraction(int(fields["num"]), int(fields["den"])), int(fields["sqrtpi_exp"]))

    @classmethod
    def parse(cls, text: str) -> ExactValue:
        """Inverse of ``str()``."""
        text = text.strip()
        if "*sqrt(pi)^" in text:
            c, k = text.split("*sqrt(pi)^")
            return cls(Fraction(c), int(k))
        return cls(Fraction(text), 0)


def pochhammer(a, k: int) -> Fraction:
    """Rising factorial a(a+1)...(a+k-1); 1 when k == 0."""
    if k < 0:
        raise ValueError("pochhammer needs k >= 0")
    a = as_rational(a)
    if a.denominator == 1:
        lo = a.numerator
        if lo > 0:
            return Fraction(math.factorial(lo + k - 1) // math.factorial(lo - 1))
        if lo + k - 1 >= 0:
            return Fraction(0)
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


def _check_positive(x: HalfInteger) -> None:
    if x.twice_value <= 0:
        raise NonPositiveArgument(f"gamma is not finite at {x}")


def gamma_exact(x) -> ExactValue:
    """Gamma at a positive half-integer.

    >>> str(gamma_exact(HalfInteger(7)))
    '15/8*sqrt(pi)^1'
    """
    x = HalfInteger.of(x)
    _check_positive(x)
    if x.is_integer:
        return ExactValue(Fraction(math.factorial(x.twice_value // 2 - 1)), 0)
    m = (x.twice_value - 1) // 2
    return ExactValue(Fraction(math.factorial(2 * m), 4**m * math.factorial(m)), 1)


def gamma_ratio(num, den) -> ExactValue:
    """Gamma(num) / Gamma(den), by telescoping the functional equation."""
    num = HalfInteger.of(num)
    den = HalfInteger.of(den)
    _check_positive(num)
    _check_positive(den)
    diff = num.twice_value - den.twice_value
    if diff % 2 == 0:
        d = diff // 2
        if d >= 0:
            return ExactValue(pochhammer(den.value, d), 0)
        return ExactValue(1 / pochhammer(num.value, -d), 0)
    # route through the nearer argument: Gamma(num)/Gamma(den) =
    # [Gamma(num)/Gamma(num')] * [Gamma(num')/Gamma(den)], num' = den +- 1/2
    if num.twice_value > den.twice_value:
        mid = den + HalfInteger(1)
        head = ExactValue(pochhammer(mid.value, (num.twice_value - mid.twice_value) // 2))
        return head * (gamma_exact(mid) / gamma_exact(den))
    mid = num + HalfInteger(1)
    tail = ExactValue(1 / pochhammer(mid.value, (den.twice_value - mid.twice_value) // 2))
    return tail * (gamma_exact(num) / gamma_exact(mid))


def to_float(v, precision: int = 53):
    """Correctly rounded value of an ExactValue.

    Returns a Python float for the default 53-bit precision and an
    :class:`mpmath.mpf` at other precisions.
    """
    v = ExactValue.coerce(v)
    if precision < 2:
        raise ValueError("precision must be at least 2 bits")
    with mpmath.workprec(precision + 64):
        x = mpmath.mpf(v.coeff.numerator) / v.coeff.denominator
        if v.sqrtpi_exp:
            x *= mpmath.sqrt(mpmath.pi) ** v.sqrtpi_exp
    if precision == 53:
        return float(x)
    with mpmath.workprec(precision):
        return +x
