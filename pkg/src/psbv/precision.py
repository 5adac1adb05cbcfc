"""Extended-precision helpers on top of gmpy2's mpfr."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import gmpy2
from gmpy2 import mpfr

DEFAULT_BITS = 128


def context(bits: int = DEFAULT_BITS):
    """Context manager setting the working precision in bits."""
    return gmpy2.context(precision=bits)


def to_mpfr(x) -> mpfr:
    """Convert int, Fraction, float or mpfr at the current precision."""
    if isinstance(x, Fraction):
        return mpfr(gmpy2.mpq(x.numerator, x.denominator))
    return mpfr(x)


def tree_sum(values: Sequence) -> mpfr:
    """Pairwise summation in a fixed order, so results do not depend on how
    the inputs were produced."""
    vals = list(values)
    if not vals:
        return mpfr(0)
    while len(vals) > 1:
        nxt = [vals[i] + vals[i + 1] for i in range(0, len(vals) - 1, 2)]
        if len(vals) % 2:
            nxt.append(vals[-1])
        vals = nxt
    return vals[0]


def e_turns(phase: mpfr) -> tuple[mpfr, mpfr]:
    """(cos 2 pi x, sin 2 pi x), reducing x mod 1 first."""
    frac = phase - gmpy2.floor(phase)
    s, c = gmpy2.sin_cos(2 * gmpy2.const_pi() * frac)
    return c, s


def psi_mpfr(x: mpfr) -> mpfr:
    """{x} - 1/2."""
    return x - gmpy2.floor(x) - mpfr(0.5)
