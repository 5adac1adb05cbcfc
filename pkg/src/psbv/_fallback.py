"""numpy implementations of the compiled kernels in ``_kernels.pyx``."""
from __future__ import annotations

import math

import numpy as np

_CHUNK = 1 << 18


def sieve_segment(lo: int, hi: int, base_primes: np.ndarray) -> np.ndarray:
    flags = np.ones(hi - lo + 1, dtype=np.uint8)
    if lo < 2:
        flags[: min(2 - lo, flags.size)] = 0
    for p in base_primes.tolist():
        if p * p > hi:
            break
        start = max(p * p, -(-lo // p) * p)
        flags[start - lo :: p] = 0
    return flags


def ndelta_brute(values: np.ndarray, deltas: np.ndarray) -> np.ndarray:
    v = np.asarray(values, dtype=np.float64)
    diff = np.abs(v[:, None] - v[None, :])
    return np.array([np.count_nonzero(diff <= d) for d in np.asarray(deltas, dtype=np.float64)], dtype=np.int64)


def progression_expsum(start: int, step: int, count: int, h1: float, c: float, h2: float, g: float) -> tuple[float, float]:
    re_parts: list[float] = []
    im_parts: list[float] = []
    for k0 in range(0, count, _CHUNK):
        k = np.arange(k0, min(count, k0 + _CHUNK), dtype=np.int64)
        n = (start + k * step).astype(np.float64)
        ph = h1 * np.power(n, c) + h2 * np.power(n, g)
        ph -= np.floor(ph)
        re_parts.extend(np.cos(2 * math.pi * ph).tolist())
        im_parts.extend(np.sin(2 * math.pi * ph).tolist())
    return math.fsum(re_parts), math.fsum(im_parts)
