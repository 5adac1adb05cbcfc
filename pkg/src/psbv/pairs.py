"""Exponent pairs and the A/B processes of van der Corput's method.

Pairs are stored exactly.  The ``+ eps`` that usually decorates a pair is
not stored; callers treat it as zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import ValidationError
from .exact import RationalLike, format_rational, parse_rational

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ExponentPair:
    kappa: Fraction
    lam: Fraction

    def __post_init__(self):
        object.__setattr__(self, "kappa", Fraction(self.kappa))
        object.__setattr__(self, "lam", Fraction(self.lam))
        problems = region_violations(self.kappa, self.lam)
        if problems:
            raise ValidationError(f"({self}) is outside the exponent-pair region: {', '.join(problems)}")

    def __iter__(self):
        return iter((self.kappa, self.lam))

    def __str__(self) -> str:
        return f"{format_rational(self.kappa)}, {format_rational(self.lam)}"

    @classmethod
    def parse(cls, text: str) -> "ExponentPair":
        """Parse ``"k,l"`` where each part is a rational string."""
        parts = [p for p in str(text).replace(" ", "").strip("()").split(",") if p]
        if len(parts) != 2:
            raise ValidationError(f"expected 'kappa,lambda', got {text!r}")
        return cls(parse_rational(parts[0]), parse_rational(parts[1]))


def region_violations(kappa: Fraction, lam: Fraction) -> list[str]:
    out = []
    if not 0 <= kappa <= HALF:
        out.append("0 <= kappa <= 1/2")
    if not HALF <= lam <= 1:
        out.append("1/2 <= lambda <= 1")
    if kappa + lam > 1:
        out.append("kappa + lambda <= 1")
    return out


def a_process(p: ExponentPair) -> ExponentPair:
    k, l = p
    return ExponentPair(k / (2 * k + 2), (k + l + 1) / (2 * k + 2))


def b_process(p: ExponentPair) -> ExponentPair:
    k, l = p
    return ExponentPair(l - HALF, k + HALF)


_PROCESSES = {"A": a_process, "B": b_process}


def parse_word(word: str | Iterable[str]) -> str:
    """Normalize a process word; accepts ``"AAAAB"``, ``"A^4B"`` or ``"A4 B"``."""
    text = "".join(word).replace("^", "").replace(" ", "").upper()
    out: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch not in _PROCESSES:
            raise ValidationError(f"invalid process letter {ch!r} in word {text!r}")
        j = i + 1
        while j < len(text) and text[j].isdigit():
            j += 1
        out.append(ch * (int(text[i + 1 : j]) if j > i + 1 else 1))
        i = j
    return "".join(out)


def apply_word(word: str, p: ExponentPair) -> ExponentPair:
    """Apply a process word to ``p`` the way ``A^4 B (0, 1)`` is written.

    The rightmost letter acts first, so ``"AAAAB"`` means A(A(A(A(B(p))))).

    Raises:
        ValidationError: naming the failing suffix if a step leaves the region.
    """
    letters = parse_word(word)
    current = p
    for i in range(len(letters) - 1, -1, -1):
        try:
            current = _PROCESSES[letters[i]](current)
        except ValidationError as exc:
            raise ValidationError(f"applying {letters[i:]!r}: {exc}") from None
    return current


def word_trace(word: str, p: ExponentPair) -> list[tuple[str, ExponentPair]]:
    """Intermediate pairs, one per applied suffix (innermost first)."""
    letters = parse_word(word)
    trace = []
    for i in range(len(letters) - 1, -1, -1):
        trace.append((letters[i:], apply_word(letters[i:], p)))
    return trace


def vdc_bound(pair: ExponentPair, Y: float, X: float) -> float:
    """``Y**kappa * X**lambda + 1/Y``: bound for a sum of e(f(n)) over X < n <= 2X
    when |f^(m)| has size Y X^(1-m)."""
    if Y <= 0 or X < 1:
        raise ValidationError("vdc_bound needs Y > 0 and X >= 1")
    return Y ** float(pair.kappa) * X ** float(pair.lam) + 1.0 / Y


def lemma7_bound(
    pair: ExponentPair,
    d: int,
    X: float,
    h1: float,
    h2: float,
    c: float,
    gamma: float,
) -> float:
    """Bound for the sum of e(h1 n^c + h2 n^gamma) over X < n <= X1 <= 2X in a
    progression mod d.

    Returns min(X/d, F^-1 + d^(k-l) |h1|^k X^(kc-k+l) + d^(k-l) |h2|^k X^(k gamma-k+l))
    with F = |h1| d X^(c-1) + |h2| d X^(gamma-1), or X/d for a vanishing phase.
    """
    if not 1 <= d <= X:
        raise ValidationError(f"lemma7_bound needs 1 <= d <= X (d={d}, X={X})")
    c, gamma = float(c), float(gamma)
    if not (1 < c < 3 and c != 2):
        raise ValidationError(f"c must lie in (1,3) minus {{2}}, got {c}")
    if not 0.5 < gamma < 1:
        raise ValidationError(f"gamma must lie in (1/2, 1), got {gamma}")
    trivial = X / d
    if h1 == 0 and h2 == 0:
        return trivial
    k, l = float(pair.kappa), float(pair.lam)
    size = abs(h1) * d * X ** (c - 1) + abs(h2) * d * X ** (gamma - 1)
    dk = d ** (k - l)
    vdc = 1.0 / size
    vdc += dk * abs(h1) ** k * X ** (k * c - k + l)
    vdc += dk * abs(h2) ** k * X ** (k * gamma - k + l)
    return min(trivial, vdc)


def as_pair(k: RationalLike, l: RationalLike) -> ExponentPair:
    return ExponentPair(Fraction(k), Fraction(l))


TRIVIAL_PAIR = ExponentPair(Fraction(0), Fraction(1))
BOURGAIN_PAIR = ExponentPair(Fraction(13, 84), Fraction(55, 84))
