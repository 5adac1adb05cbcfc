"""Exact integer and rational arithmetic.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  Nothing in this module touches floating point.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ExactArithmeticError, ValidationError

RationalLike = Union[Fraction, int]

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def parse_rational(text: str) -> Fraction:
    """Parse ``"u/v"``, an integer or a finite decimal string exactly.

    Raises:
        ValidationError: if the string is not a finite rational.
    """
    if isinstance(text, (Fraction, int)):
        return Fraction(text)
    s = str(text).strip()
    try:
        value = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"unparseable rational {s!r}") from exc
    return value


def format_rational(x: RationalLike) -> str:
    """Serialize as ``"num/den"``; integers get an explicit ``/1``."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rat_arith(x: RationalLike, y: RationalLike, op: str) -> Union[Fraction, int]:
    """Exact binary operation on rationals.

    ``op`` is one of ``add, sub, mul, div, cmp``.  ``cmp`` returns -1, 0 or 1.

    Raises:
        ExactArithmeticError: on division by zero.
        ValidationError: on an unknown operator.
    """
    x, y = Fraction(x), Fraction(y)
    if op == "cmp":
        return (x > y) - (x < y)
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValidationError(f"unknown rational operation {op!r}") from None
    if op == "div" and y == 0:
        raise ExactArithmeticError(f"division of {format_rational(x)} by zero")
    return fn(x, y)


def int_nth_root_floor(n: int, v: int) -> int:
    """Largest m >= 0 with m**v <= n, by integer Newton iteration."""
    if v < 1:
        raise ValidationError(f"root index must be >= 1, got {v}")
    if n < 0:
        raise ValidationError("int_nth_root_floor needs n >= 0")
    if n < 2 or v == 1:
        return n
    # start strictly above the root; Newton then decreases monotonically
    x = 1 << -(-n.bit_length() // v)
    while True:
        y = ((v - 1) * x + n // x ** (v - 1)) // v
        if y >= x:
            return x
        x = y


def int_nth_root_ceil(n: int, v: int) -> int:
    """Least m >= 0 with m**v >= n."""
    m = int_nth_root_floor(n, v)
    return m if m**v == n else m + 1


def floor_power(x: int, e: Fraction) -> int:
    """Exact floor(x**e) for integer x >= 1 and rational e >= 0."""
    e = Fraction(e)
    if x < 1 or e < 0:
        raise ValidationError("floor_power needs x >= 1 and e >= 0")
    return int_nth_root_floor(x**e.numerator, e.denominator)


@dataclass(frozen=True)
class LinearForm:
    """Affine function ``constant + g*gamma + t*theta + m*mu`` with rational coefficients.

    Used for exponents of N in bound chains, where M = N**mu and D = N**theta.
    """

    constant: Fraction = Fraction(0)
    coeff_gamma: Fraction = Fraction(0)
    coeff_theta: Fraction = Fraction(0)
    coeff_mu: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("constant", "coeff_gamma", "coeff_theta", "coeff_mu"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def __call__(self, gamma: RationalLike = 0, theta: RationalLike = 0, mu: RationalLike = 0) -> Fraction:
        return form_eval(self, gamma, theta, mu)

    def __add__(self, other: "LinearForm | RationalLike") -> "LinearForm":
        if not isinstance(other, LinearForm):
            other = LinearForm(Fraction(other))
        return LinearForm(
            self.constant + other.constant,
            self.coeff_gamma + other.coeff_gamma,
            self.coeff_theta + other.coeff_theta,
            self.coeff_mu + other.coeff_mu,
        )

    __radd__ = __add__

    def __neg__(self) -> "LinearForm":
        return self * -1

    def __sub__(self, other: "LinearForm | RationalLike") -> "LinearForm":
        if not isinstance(other, LinearForm):
            other = LinearForm(Fraction(other))
        return self + (-other)

    def __rsub__(self, other: RationalLike) -> "LinearForm":
        return LinearForm(Fraction(other)) - self

    def __mul__(self, k: RationalLike) -> "LinearForm":
        k = Fraction(k)
        return LinearForm(self.constant * k, self.coeff_gamma * k, self.coeff_theta * k, self.coeff_mu * k)

    __rmul__ = __mul__

    def __truediv__(self, k: RationalLike) -> "LinearForm":
        return self * (1 / Fraction(k))

    def __str__(self) -> str:
        parts = [format_rational(self.constant)]
        for coeff, sym in ((self.coeff_gamma, "g"), (self.coeff_theta, "th"), (self.coeff_mu, "mu")):
            if coeff:
                sign = "-" if coeff < 0 else "+"
                parts.append(f"{sign} {format_rational(abs(coeff))}*{sym}")
        return " ".join(parts)


GAMMA = LinearForm(coeff_gamma=1)
THETA = LinearForm(coeff_theta=1)
MU = LinearForm(coeff_mu=1)
ONE = LinearForm(constant=1)


def form_eval(f: LinearForm, gamma: RationalLike, theta: RationalLike, mu: RationalLike) -> Fraction:
    """Exact value of the affine form at rational (gamma, theta, mu)."""
    return f.constant + f.coeff_gamma * Fraction(gamma) + f.coeff_theta * Fraction(theta) + f.coeff_mu * Fraction(mu)
