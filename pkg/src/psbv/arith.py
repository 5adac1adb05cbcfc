"""Integer-side number theory: segmented sieve, phi, tau, Lambda and exact
Piatetski-Shapiro membership for rational gamma.

Membership of n is the indicator

    delta(n) = ceil((n+1)^gamma) - ceil(n^gamma),

which equals 1 exactly when n = [m^(1/gamma)] for some integer m.  With
gamma = u/v every ceiling is an integer v-th root of an integer power.
"""
from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Optional

import numpy as np

from . import kernels
from .errors import BudgetError, ValidationError
from .exact import format_rational, int_nth_root_ceil, int_nth_root_floor, parse_rational

MAX_INT64 = 2**63 - 1
DEFAULT_SEGMENT = 1 << 22
# per-call span limit for primes_in / prime_array
SPAN_BUDGET = 4 * 10**9
# limit for von Mangoldt tables
LAMBDA_BUDGET = 2 * 10**8


@dataclass(frozen=True)
class PsGamma:
    """gamma = u/v with 1/2 < gamma <= 1."""

    u: int
    v: int

    def __post_init__(self):
        if self.u < 1 or self.v < 1 or math.gcd(self.u, self.v) != 1:
            raise ValidationError(f"gamma must be a reduced fraction u/v, got {self.u}/{self.v}")
        if not (Fraction(1, 2) < self.fraction <= 1):
            raise ValidationError(f"gamma must lie in (1/2, 1], got {self.u}/{self.v}")

    @classmethod
    def parse(cls, text) -> "PsGamma":
        g = parse_rational(text)
        return cls(g.numerator, g.denominator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.u, self.v)

    def __float__(self) -> float:
        return self.u / self.v

    def __str__(self) -> str:
        return format_rational(self.fraction)


# --- sieve -----------------------------------------------------------------


@lru_cache(maxsize=8)
def _small_primes(limit: int) -> np.ndarray:
    limit = max(limit, 2)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def base_primes(hi: int) -> np.ndarray:
    return _small_primes(math.isqrt(hi) + 1)


def _is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass
class SieveSegment:
    lo: int
    hi: int
    flags: np.ndarray  # uint8, flags[i] == 1 iff lo + i is prime

    def primes(self) -> np.ndarray:
        return np.flatnonzero(self.flags).astype(np.int64) + self.lo

    def self_check(self, samples: int = 1000, seed: Optional[int] = None) -> None:
        """Compare random bitmap entries with trial division."""
        rng = random.Random(self.lo if seed is None else seed)
        for _ in range(samples):
            n = rng.randint(self.lo, self.hi)
            if bool(self.flags[n - self.lo]) != _is_prime_trial(n):
                raise AssertionError(f"sieve bitmap disagrees with trial division at n={n}")


def sieve(lo: int, hi: int, self_check: bool = False) -> SieveSegment:
    """Sieve one segment [lo, hi]."""
    seg = SieveSegment(lo, hi, kernels.sieve_segment(lo, hi, base_primes(hi)))
    if self_check:
        seg.self_check()
    return seg


def _check_range(lo: int, hi: int, budget: int) -> None:
    if not 2 <= lo <= hi + 1 or hi > MAX_INT64:
        raise ValidationError(f"prime range must satisfy 2 <= lo <= hi <= 2^63-1, got [{lo}, {hi}]")
    if hi - lo + 1 > budget:
        raise BudgetError(f"prime range [{lo}, {hi}] spans {hi - lo + 1} integers, budget is {budget}")


def _segment_bounds(lo: int, hi: int, size: int) -> list[tuple[int, int]]:
    return [(s, min(hi, s + size - 1)) for s in range(lo, hi + 1, size)]


def _sieve_primes_job(args: tuple[int, int, bool, Optional[str]]) -> np.ndarray:
    lo, hi, check, cache_dir = args
    if cache_dir is not None:
        from .cache import cached_segment

        seg = cached_segment(Path(cache_dir), lo, hi)
    else:
        seg = sieve(lo, hi, self_check=check)
    return seg.primes()


def prime_array(
    lo: int,
    hi: int,
    *,
    segment_size: int = DEFAULT_SEGMENT,
    workers: int = 1,
    self_check: bool = False,
    cache_dir: Optional[str | Path] = None,
    budget: int = SPAN_BUDGET,
) -> np.ndarray:
    """All primes in [lo, hi] as an ascending int64 array.

    Segments are independent; with ``workers > 1`` they are sieved in a
    process pool and concatenated in segment order.
    """
    if hi < lo:
        return np.zeros(0, dtype=np.int64)
    _check_range(lo, hi, budget)
    jobs = [(a, b, self_check, None if cache_dir is None else str(cache_dir)) for a, b in _segment_bounds(lo, hi, segment_size)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sieve_primes_job, jobs))
    else:
        parts = [_sieve_primes_job(j) for j in jobs]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


def primes_in(lo: int, hi: int, *, segment_size: int = DEFAULT_SEGMENT, budget: int = SPAN_BUDGET) -> Iterator[int]:
    """Stream the primes in [lo, hi] in ascending order."""
    _check_range(lo, hi, budget)
    for a, b in _segment_bounds(lo, hi, segment_size):
        yield from sieve(a, b).primes().tolist()


# --- multiplicative functions ----------------------------------------------


def _factor(n: int) -> dict[int, int]:
    if not 1 <= n <= MAX_INT64:
        raise ValidationError(f"argument must lie in [1, 2^63-1], got {n}")
    from sympy import factorint

    return {int(p): int(e) for p, e in factorint(n).items()}


def euler_phi(d: int) -> int:
    out = d
    for p in _factor(d):
        out -= out // p
    return out


def divisor_tau(n: int) -> int:
    return math.prod(e + 1 for e in _factor(n).values())


def von_mangoldt(n: int) -> float:
    fac = _factor(n)
    if len(fac) != 1:
        return 0.0
    return math.log(next(iter(fac)))


def von_mangoldt_table(limit: int) -> np.ndarray:
    """Lambda(n) for 0 <= n <= limit (entries 0 and 1 are zero)."""
    if limit > LAMBDA_BUDGET:
        raise BudgetError(f"Lambda table up to {limit} exceeds budget {LAMBDA_BUDGET}")
    table = np.zeros(limit + 1, dtype=np.float64)
    if limit < 2:
        return table
    primes = prime_array(2, limit)
    table[primes] = np.log(primes.astype(np.float64))
    for p in primes[: np.searchsorted(primes, math.isqrt(limit), side="right")].tolist():
        q = p * p
        while q <= limit:
            table[q] = math.log(p)
            q *= p
    return table


# --- Piatetski-Shapiro membership -------------------------------------------


def ceil_power(n: int, gamma: PsGamma) -> int:
    """Exact ceil(n^gamma)."""
    return int_nth_root_ceil(n**gamma.u, gamma.v)


def is_integral_power(n: int, gamma: PsGamma) -> bool:
    """Whether n^gamma is an integer."""
    r = int_nth_root_floor(n**gamma.u, gamma.v)
    return r**gamma.v == n**gamma.u


def ps_indicator(n: int, gamma: PsGamma) -> int:
    """ceil((n+1)^gamma) - ceil(n^gamma), from integer roots only."""
    if n < 1:
        raise ValidationError(f"ps_indicator needs n >= 1, got {n}")
    return ceil_power(n + 1, gamma) - ceil_power(n, gamma)


# relative guard separating float n^gamma from integers; np.power is accurate
# to a few ulp (~1e-15 relative), so 1e-13 leaves a wide margin
_GUARD = 1e-13
# below this size the float power is within 1e-2 of the truth
_SHORTCUT_LIMIT = 1e12


def ceil_power_batch(ns: np.ndarray, gamma: PsGamma) -> tuple[np.ndarray, np.ndarray]:
    """Exact ceil(n^gamma) and integrality flags for an array of n >= 1.

    A float estimate decides every n whose power is not within a relative
    guard of an integer; the remaining ones go through the integer-root
    path.  Values must stay below 2^53.
    """
    ns = np.asarray(ns, dtype=np.int64)
    if ns.size and (ns.min() < 0 or ns.max() >= 2**53):
        raise ValidationError("ceil_power_batch needs 0 <= n < 2^53")
    if gamma.u == gamma.v:
        return ns.copy(), np.ones(ns.shape, dtype=bool)
    r = np.power(ns.astype(np.float64), gamma.u / gamma.v)
    nearest = np.rint(r)
    ceil = np.ceil(r).astype(np.int64)
    exact = np.zeros(ns.shape, dtype=bool)
    unsure = np.flatnonzero(np.abs(r - nearest) <= _GUARD * np.maximum(r, 1.0))
    for i in unsure.tolist():
        # the true power lies within the guard of k, so ceil is k or k + 1
        n, k = int(ns[i]), int(nearest[i])
        if r[i] > _SHORTCUT_LIMIT:
            ceil[i], exact[i] = ceil_power(n, gamma), is_integral_power(n, gamma)
            continue
        lhs, rhs = n**gamma.u, k**gamma.v
        ceil[i] = k if lhs <= rhs else k + 1
        exact[i] = lhs == rhs
    return ceil, exact


def ps_indicator_batch(ns: np.ndarray, gamma: PsGamma) -> np.ndarray:
    ns = np.asarray(ns, dtype=np.int64)
    upper, _ = ceil_power_batch(ns + 1, gamma)
    lower, _ = ceil_power_batch(ns, gamma)
    return (upper - lower).astype(np.int8)


def ps_prefix_count(N: int, gamma: PsGamma) -> int:
    """sum_{n <= N} delta(n), which telescopes to ceil((N+1)^gamma) - 1."""
    return ceil_power(N + 1, gamma) - 1


@dataclass(frozen=True)
class PsCount:
    X: int
    gamma: PsGamma
    count: int
    smooth: float

    @property
    def relative_gap(self) -> float:
        return abs(self.count - self.smooth) / self.count if self.count else math.inf

    def to_dict(self) -> dict:
        return {
            "X": self.X,
            "gamma": str(self.gamma),
            "count": self.count,
            "smooth": self.smooth,
            "relative_gap": self.relative_gap,
        }


def smooth_weights(primes: np.ndarray, gamma: PsGamma) -> np.ndarray:
    """(p+1)^gamma - p^gamma in float, written to avoid cancellation."""
    p = primes.astype(np.float64)
    g = gamma.u / gamma.v
    return np.power(p, g) * np.expm1(g * np.log1p(1.0 / p))


def count_ps_primes(
    X: int,
    gamma: PsGamma,
    *,
    workers: int = 1,
    cache_dir: Optional[str | Path] = None,
) -> PsCount:
    """Number of primes p <= X with delta(p) = 1, and the smooth comparator
    sum_{p <= X} ((p+1)^gamma - p^gamma)."""
    if X < 2:
        raise ValidationError(f"count_ps_primes needs X >= 2, got {X}")
    primes = prime_array(2, X, workers=workers, cache_dir=cache_dir)
    count = int(np.count_nonzero(ps_indicator_batch(primes, gamma)))
    smooth = math.fsum(smooth_weights(primes, gamma).tolist())
    return PsCount(X, gamma, count, smooth)
