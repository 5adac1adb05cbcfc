"""Analytic side: the sawtooth psi, its truncated Fourier series, weighted
exponential sums over Piatetski-Shapiro primes in progressions, the main
term integral, the discrepancy statistic, and brute-force oracles for the
collision count and the progression exponential-sum bound.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import gmpy2
import numpy as np
from gmpy2 import mpfr

from . import kernels
from .arith import (
    PsGamma,
    base_primes,
    ceil_power_batch,
    euler_phi,
    prime_array,
    ps_indicator_batch,
)
from .errors import BudgetError, QuadratureError, ValidationError
from .exact import floor_power, format_rational, parse_rational
from .pairs import ExponentPair, lemma7_bound, vdc_bound
from .precision import DEFAULT_BITS, context, e_turns, psi_mpfr, to_mpfr, tree_sum

TWO_PI = 2 * math.pi
PRIME_CHUNK = 4096
PSI_BLOCK_BUDGET = 10**7
NDELTA_BUDGET = 10**4
LEMMA7_BUDGET = 10**7
# above this phase size the double-precision kernel loses ~1e-9 turns
FLOAT_PHASE_LIMIT = 2.0**22


# --- sawtooth ------------------------------------------------------------


def psi(t):
    """psi(t) = {t} - 1/2 for float, int, Fraction or mpfr t."""
    if isinstance(t, type(mpfr(0))):
        return psi_mpfr(t)
    if isinstance(t, (int, Fraction)):
        return t - math.floor(t) - Fraction(1, 2)
    return t - math.floor(t) - 0.5


def psi_array(t: np.ndarray) -> np.ndarray:
    t = np.asarray(t, dtype=np.float64)
    return t - np.floor(t) - 0.5


@dataclass(frozen=True)
class TruncationSample:
    series: float
    error: float  # psi(t) - series
    envelope: float


def _dist_to_int(t: np.ndarray) -> np.ndarray:
    return np.abs(t - np.rint(t))


def psi_truncation_batch(t: np.ndarray, H: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Truncated series -sum_{1<=|h|<=H} e(ht)/(2 pi i h), its deviation from
    psi(t) and the envelope min(1, 1/(H ||t||)), for each t."""
    if H < 1:
        raise ValidationError(f"H must be >= 1, got {H}")
    t = np.asarray(t, dtype=np.float64)
    r = t - np.rint(t)  # exact for |t| < 2^52; integer t gives r = 0
    series = np.zeros_like(r)
    for h in range(1, H + 1):
        series -= np.sin(TWO_PI * h * r) / (math.pi * h)
    dist = np.abs(r)
    with np.errstate(divide="ignore"):
        envelope = np.where(dist == 0, 1.0, np.minimum(1.0, 1.0 / (H * dist)))
    return series, psi_array(t) - series, envelope


def psi_truncation_error(t: float, H: int) -> TruncationSample:
    series, err, env = psi_truncation_batch(np.array([float(t)]), H)
    return TruncationSample(float(series[0]), float(err[0]), float(env[0]))


@dataclass(frozen=True)
class TruncationReport:
    H: int
    samples: int
    sup_ratio: float
    argmax_t: float
    integer_error: float

    def to_dict(self) -> dict:
        return {
            "H": self.H,
            "samples": self.samples,
            "sup_ratio": self.sup_ratio,
            "argmax_t": self.argmax_t,
            "integer_error": self.integer_error,
        }


def truncation_experiment(H: int, samples: int, seed: int) -> TruncationReport:
    """Empirical constant in |psi - series| <= C min(1, 1/(H ||t||)) over uniform t in [0, 1)."""
    rng = np.random.default_rng(seed)
    t = rng.uniform(0.0, 1.0, samples)
    _, err, env = psi_truncation_batch(t, H)
    ratio = np.abs(err) / env
    i = int(np.argmax(ratio))
    at_int = psi_truncation_error(0.0, H)
    return TruncationReport(H, samples, float(ratio[i]), float(t[i]), abs(at_int.error))


# --- main term ------------------------------------------------------------

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)
_MAX_DEPTH = 40


def main_term_integral(X: float, t: float, c: float, rel_tol: float = 1e-8) -> complex:
    """Integral of e(t y^c) over [2, X].

    Panels end where t y^c crosses an integer, so every panel carries at
    most one turn of phase and 16 Gauss-Legendre nodes; each panel is then
    bisected until the halves agree to its share of rel_tol * (X - 2).
    """
    X, t, c = float(X), float(t), float(c)
    if X < 3:
        raise ValidationError(f"main_term_integral needs X >= 3, got {X}")
    if t == 0:
        return complex(X - 2.0, 0.0)
    at = abs(t)
    lo_phase, hi_phase = at * 2.0**c, at * X**c
    turns = np.arange(math.floor(lo_phase) + 1, math.ceil(hi_phase))
    breaks = np.concatenate(([2.0], (turns / at) ** (1.0 / c), [X]))

    def f(y: np.ndarray) -> np.ndarray:
        ph = t * np.power(y, c)
        ph -= np.floor(ph)
        return np.exp(1j * TWO_PI * ph)

    def gl(a: float, b: float) -> complex:
        half = 0.5 * (b - a)
        return half * complex(np.dot(_GL_WEIGHTS, f(0.5 * (a + b) + half * _GL_NODES)))

    def adapt(a: float, b: float, whole: complex, depth: int) -> complex:
        m = 0.5 * (a + b)
        left, right = gl(a, m), gl(m, b)
        if abs(left + right - whole) <= 0.1 * rel_tol * (b - a):
            return left + right
        if depth >= _MAX_DEPTH:
            raise QuadratureError(f"no convergence on [{a}, {b}] after {depth} bisections")
        return adapt(a, m, left, depth + 1) + adapt(m, b, right, depth + 1)

    total = 0j
    for a, b in zip(breaks[:-1], breaks[1:]):
        if b > a:
            total += adapt(a, b, gl(a, b), 0)
    return total


# --- weighted sums over Piatetski-Shapiro primes ---------------------------


@dataclass(frozen=True)
class SumSpec:
    """Parameters of the discrepancy statistic.

    ``t`` is literal unless ``t_relative`` is set, in which case the actual
    phase coefficient is ``t * X^(1/4 - c)``.  Exactly one of ``D`` and
    ``theta`` fixes the moduli range; with ``theta``, D = floor(X^theta).
    """

    X: int
    gamma: PsGamma
    c: Fraction
    t: Fraction = Fraction(0)
    t_relative: bool = False
    a: int = 1
    D: Optional[int] = None
    theta: Optional[Fraction] = None
    A: Fraction = Fraction(1)
    precision: int = DEFAULT_BITS

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        object.__setattr__(self, "t", Fraction(self.t))
        object.__setattr__(self, "A", Fraction(self.A))
        if self.theta is not None:
            object.__setattr__(self, "theta", Fraction(self.theta))
        if self.X < 3:
            raise ValidationError(f"X must be >= 3, got {self.X}")
        if not (1 < self.c < 3 and self.c != 2):
            raise ValidationError(f"c must lie in (1,3) minus {{2}}, got {format_rational(self.c)}")
        if self.a == 0:
            raise ValidationError("a must be a nonzero integer")
        if self.A <= 0:
            raise ValidationError("A must be positive")
        if self.precision < 53:
            raise ValidationError("precision must be at least 53 bits")
        if (self.D is None) == (self.theta is None):
            raise ValidationError("give exactly one of D and theta")
        if self.theta is not None and not 0 <= self.theta <= 1:
            raise ValidationError("theta must lie in [0, 1]")
        if self.D is not None and self.D < 1:
            raise ValidationError(f"D must be >= 1, got {self.D}")
        if self.t_relative:
            if not abs(self.t) < 1:
                raise ValidationError(f"relative t must satisfy |t| < 1, got {format_rational(self.t)}")
        elif not _below_ceiling(abs(self.t), self.X, Fraction(1, 4) - self.c):
            raise ValidationError(f"|t| = {float(self.t)!r} violates |t| < X^(1/4-c)")

    @property
    def moduli_cutoff(self) -> int:
        if self.D is not None:
            return self.D
        return floor_power(self.X, self.theta)

    def t_value(self) -> mpfr:
        """The phase coefficient t at the current mpfr precision."""
        t = to_mpfr(self.t)
        if self.t_relative:
            t *= to_mpfr(self.X) ** to_mpfr(Fraction(1, 4) - self.c)
        return t


def _below_ceiling(t: Fraction, X: int, e: Fraction) -> bool:
    """Exact test of t < X^e for rational t >= 0, e < 0."""
    p, q = -e.numerator, e.denominator  # X^e = X^(-p/q)
    return t.numerator**q * X**p < t.denominator**q


@dataclass(frozen=True)
class _PrimeTerms:
    primes: np.ndarray
    ps: tuple  # (re, im) mpfr pairs: delta(p) w(p) e(t p^c)
    smooth: tuple  # ((p+1)^g - p^g) w(p) e(t p^c)
    rough: tuple  # (psi(-(p+1)^g) - psi(-p^g)) w(p) e(t p^c)


def _power_mpfr(n: int, ceil: int, exact: bool, g: mpfr) -> mpfr:
    return mpfr(ceil) if exact else mpfr(n) ** g


def _neg_psi(x: mpfr, exact: bool) -> mpfr:
    """psi(-x), with the integer case decided by the exact flag."""
    return mpfr(-0.5) if exact else psi_mpfr(-x)


def _prime_terms_job(args) -> list:
    primes, c0, e0, c1, e1, u, v, c, t, bits = args
    out = []
    with context(bits):
        g = to_mpfr(Fraction(u, v))
        cc = to_mpfr(c)
        t = mpfr(t)
        for p, cp0, ex0, cp1, ex1 in zip(primes, c0, e0, c1, e1):
            x0 = _power_mpfr(p, cp0, ex0, g)
            x1 = _power_mpfr(p + 1, cp1, ex1, g)
            w = mpfr(p) / x0 * gmpy2.log(mpfr(p))
            cos_, sin_ = e_turns(t * mpfr(p) ** cc) if t != 0 else (mpfr(1), mpfr(0))
            wr, wi = w * cos_, w * sin_
            delta = cp1 - cp0
            sm = x1 - x0
            rough = _neg_psi(x1, ex1) - _neg_psi(x0, ex0)
            out.append((wr * delta, wi * delta, wr * sm, wi * sm, wr * rough, wi * rough))
    return out


def _prime_terms(spec: SumSpec, workers: int = 1) -> _PrimeTerms:
    primes = prime_array(2, spec.X)
    c0, e0 = ceil_power_batch(primes, spec.gamma)
    c1, e1 = ceil_power_batch(primes + 1, spec.gamma)
    with context(spec.precision):
        t = spec.t_value()
    jobs = []
    for s in range(0, len(primes), PRIME_CHUNK):
        sl = slice(s, s + PRIME_CHUNK)
        jobs.append(
            (
                primes[sl].tolist(),
                c0[sl].tolist(),
                e0[sl].tolist(),
                c1[sl].tolist(),
                e1[sl].tolist(),
                spec.gamma.u,
                spec.gamma.v,
                spec.c,
                t,
                spec.precision,
            )
        )
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_prime_terms_job, jobs))
    else:
        chunks = [_prime_terms_job(j) for j in jobs]
    rows = [r for ch in chunks for r in ch]
    ps = tuple((r[0], r[1]) for r in rows)
    smooth = tuple((r[2], r[3]) for r in rows)
    rough = tuple((r[4], r[5]) for r in rows)
    return _PrimeTerms(primes, ps, smooth, rough)


@lru_cache(maxsize=4)
def _cached_prime_terms(spec: SumSpec) -> _PrimeTerms:
    return _prime_terms(spec)


def _class_sum(terms: _PrimeTerms, which: str, d: int, a: int) -> tuple[mpfr, mpfr]:
    idx = np.flatnonzero(terms.primes % d == a % d).tolist()
    vals = getattr(terms, which)
    return tree_sum([vals[i][0] for i in idx]), tree_sum([vals[i][1] for i in idx])


def ps_progression_sum(spec: SumSpec, d: int, a: Optional[int] = None) -> complex:
    """Sum over primes p <= X, p = a mod d, with delta(p) = 1 of p^(1-g) e(t p^c) log p.

    ``a`` defaults to ``spec.a``.
    """
    if d < 1:
        raise ValidationError(f"modulus must be >= 1, got {d}")
    terms = _cached_prime_terms(spec)
    with context(spec.precision):
        re, im = _class_sum(terms, "ps", d, spec.a if a is None else a)
    return complex(float(re), float(im))


@dataclass(frozen=True)
class ModulusRow:
    d: int
    phi_d: int
    sum: complex
    main: complex
    abs_err: float
    e_smooth: complex
    e_psi: complex

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "phi_d": self.phi_d,
            "sum_re": self.sum.real,
            "sum_im": self.sum.imag,
            "main_re": self.main.real,
            "main_im": self.main.imag,
            "abs_err": self.abs_err,
            "e_smooth_re": self.e_smooth.real,
            "e_smooth_im": self.e_smooth.imag,
            "e_psi_re": self.e_psi.real,
            "e_psi_im": self.e_psi.imag,
        }


@dataclass(frozen=True)
class DiscrepancyReport:
    X: int
    D: int
    rows: tuple[ModulusRow, ...]
    total: float
    total_over_X: float
    total_log_A_over_X: float
    main_integral: complex
    split_defect: float  # max_d |E - E_smooth - E_psi| / |E| evaluated in extended precision

    def to_dict(self) -> dict:
        return {
            "X": self.X,
            "D": self.D,
            "total": self.total,
            "total_over_X": self.total_over_X,
            "total_log_A_over_X": self.total_log_A_over_X,
            "main_integral_re": self.main_integral.real,
            "main_integral_im": self.main_integral.imag,
            "split_defect": self.split_defect,
            "rows": [r.to_dict() for r in self.rows],
        }


def bv_statistic(spec: SumSpec, workers: int = 1) -> DiscrepancyReport:
    """Per-modulus discrepancies E(d) for d <= D with gcd(d, a) = 1, and their total.

    E(d) = (PS-prime sum in the class a mod d) - (gamma/phi(d)) * integral.
    Alongside, E(d) is split as E_smooth(d) + E_psi(d) using the smooth
    weight (p+1)^g - p^g and the sawtooth weight psi(-(p+1)^g) - psi(-p^g).
    """
    D = spec.moduli_cutoff
    if D < 1:
        raise ValidationError(f"moduli cutoff D = {D} is below 1")
    terms = _prime_terms(spec, workers=workers)
    rows = []
    abs_errs = []
    defect = mpfr(0)
    with context(spec.precision):
        t = spec.t_value()
        integral = main_term_integral(spec.X, float(t), float(spec.c))
        ire, iim = mpfr(integral.real), mpfr(integral.imag)
        g = to_mpfr(spec.gamma.fraction)
        for d in range(1, D + 1):
            if math.gcd(d, spec.a) != 1:
                continue
            phi = euler_phi(d)
            mre, mim = g * ire / phi, g * iim / phi
            sre, sim = _class_sum(terms, "ps", d, spec.a)
            smre, smim = _class_sum(terms, "smooth", d, spec.a)
            rre, rim = _class_sum(terms, "rough", d, spec.a)
            ere, eim = sre - mre, sim - mim
            err = gmpy2.hypot(ere, eim)
            abs_errs.append(err)
            mismatch = gmpy2.hypot(ere - (smre - mre) - rre, eim - (smim - mim) - rim)
            if err > 0:
                defect = max(defect, mismatch / err)
            rows.append(
                ModulusRow(
                    d,
                    phi,
                    complex(float(sre), float(sim)),
                    complex(float(mre), float(mim)),
                    float(err),
                    complex(float(smre - mre), float(smim - mim)),
                    complex(float(rre), float(rim)),
                )
            )
        total = tree_sum(abs_errs)
        X = mpfr(spec.X)
        over_x = total / X
        log_a = over_x * gmpy2.log(X) ** to_mpfr(spec.A)
    return DiscrepancyReport(
        spec.X, D, tuple(rows), float(total), float(over_x), float(log_a), integral, float(defect)
    )


def split_identity_defect(ns: np.ndarray, gamma: PsGamma, precision: int = DEFAULT_BITS) -> float:
    """max |delta(n) - ((n+1)^g - n^g) - psi(-(n+1)^g) + psi(-n^g)| over ns.

    delta comes from exact integer roots; the right-hand side is evaluated
    in mpfr with psi taken from floor(), integers detected exactly.
    """
    ns = np.asarray(ns, dtype=np.int64)
    delta = ps_indicator_batch(ns, gamma).tolist()
    c0, e0 = ceil_power_batch(ns, gamma)
    c1, e1 = ceil_power_batch(ns + 1, gamma)
    worst = mpfr(0)
    with context(precision):
        g = to_mpfr(gamma.fraction)
        for i, n in enumerate(ns.tolist()):
            x0 = _power_mpfr(n, int(c0[i]), bool(e0[i]), g)
            x1 = _power_mpfr(n + 1, int(c1[i]), bool(e1[i]), g)
            rhs = (x1 - x0) + _neg_psi(x1, bool(e1[i])) - _neg_psi(x0, bool(e0[i]))
            worst = max(worst, abs(delta[i] - rhs))
        return float(worst)


# --- Lambda-weighted sawtooth block ----------------------------------------


def _prime_powers(lo: int, hi: int) -> list[tuple[int, int]]:
    """(n, p) for prime powers n = p^k in (lo, hi]."""
    out = [(int(p), int(p)) for p in prime_array(max(lo + 1, 2), hi).tolist()] if hi > lo else []
    for p in base_primes(hi).tolist():
        q = p * p
        while q <= hi:
            if q > lo:
                out.append((q, p))
            q *= p
    out.sort()
    return out


def psi_component_sum(
    N: int,
    d: int,
    a: int,
    t,
    c,
    gamma: PsGamma,
    precision: int = DEFAULT_BITS,
    hi: Optional[int] = None,
) -> complex:
    """Sum over N < n <= 2N (or up to ``hi``), n = a mod d, of
    Lambda(n) e(t n^c) (psi(-(n+1)^g) - psi(-n^g))."""
    hi = 2 * N if hi is None else hi
    if hi > PSI_BLOCK_BUDGET:
        raise BudgetError(f"block end {hi} exceeds budget {PSI_BLOCK_BUDGET}")
    if N < 1 or d < 1:
        raise ValidationError("psi_component_sum needs N >= 1 and d >= 1")
    pp = [(n, p) for n, p in _prime_powers(N, hi) if n % d == a % d]
    ns = np.array([n for n, _ in pp], dtype=np.int64)
    c0, e0 = ceil_power_batch(ns, gamma)
    c1, e1 = ceil_power_batch(ns + 1, gamma)
    with context(precision):
        g = to_mpfr(gamma.fraction)
        tt, cc = to_mpfr(parse_rational(t) if isinstance(t, str) else t), to_mpfr(parse_rational(c) if isinstance(c, str) else c)
        res, ims = [], []
        for i, (n, p) in enumerate(pp):
            x0 = _power_mpfr(n, int(c0[i]), bool(e0[i]), g)
            x1 = _power_mpfr(n + 1, int(c1[i]), bool(e1[i]), g)
            w = gmpy2.log(mpfr(p)) * (_neg_psi(x1, bool(e1[i])) - _neg_psi(x0, bool(e0[i])))
            cos_, sin_ = e_turns(tt * mpfr(n) ** cc) if tt != 0 else (mpfr(1), mpfr(0))
            res.append(w * cos_)
            ims.append(w * sin_)
        return complex(float(tree_sum(res)), float(tree_sum(ims)))


# --- collision count -----------------------------------------------------------


@dataclass(frozen=True)
class NDeltaQuery:
    H: int
    N: int
    Delta: float
    gamma: PsGamma


@dataclass(frozen=True)
class NDeltaResult:
    count: int
    envelope: float
    ratio: float

    def to_dict(self) -> dict:
        return {"count": self.count, "envelope": self.envelope, "ratio": self.ratio}


def _ndelta_values(H: int, N: int, gamma: PsGamma) -> np.ndarray:
    if H < 1 or N < 1:
        raise ValidationError("H and N must be >= 1")
    if H * N > NDELTA_BUDGET:
        raise BudgetError(f"H*N = {H * N} exceeds the brute-force budget {NDELTA_BUDGET}")
    h = np.arange(H + 1, 2 * H + 1, dtype=np.float64)
    n = np.arange(N + 1, 2 * N + 1, dtype=np.float64)
    return np.ascontiguousarray((h[:, None] * np.power(n, float(gamma))[None, :]).ravel())


def ndelta_envelope(H: int, N: int, Delta: float, gamma: PsGamma) -> float:
    """Delta H N^(2-g) + H N log(2HN)."""
    return Delta * H * N ** (2 - float(gamma)) + H * N * math.log(2 * H * N)


def ndelta_counts(H: int, N: int, gamma: PsGamma, deltas: Sequence[float]) -> list[NDeltaResult]:
    """Number of (h1, h2, n1, n2) with h ~ H, n ~ N and |h1 n1^g - h2 n2^g| <= Delta."""
    deltas_arr = np.ascontiguousarray(deltas, dtype=np.float64)
    if np.any(deltas_arr <= 0):
        raise ValidationError("Delta must be positive")
    counts = kernels.ndelta_brute(_ndelta_values(H, N, gamma), deltas_arr)
    out = []
    for cnt, dl in zip(counts.tolist(), deltas_arr.tolist()):
        env = ndelta_envelope(H, N, dl, gamma)
        out.append(NDeltaResult(int(cnt), env, cnt / env))
    return out


def ndelta_count(q: NDeltaQuery) -> NDeltaResult:
    return ndelta_counts(q.H, q.N, q.gamma, [q.Delta])[0]


# --- progression exponential sums ------------------------------------------------


def progression_expsum(
    start: int, step: int, count: int, h1: float, c: float, h2: float, g: float, precision: int = DEFAULT_BITS
) -> complex:
    """Sum of e(h1 n^c + h2 n^g) over n = start + k step, 0 <= k < count.

    Uses the compiled double-precision kernel while phases stay small and
    an mpfr loop otherwise.
    """
    if count <= 0:
        return 0j
    last = start + (count - 1) * step
    size = abs(h1) * float(last) ** c + abs(h2) * float(last) ** g
    if size < FLOAT_PHASE_LIMIT:
        re, im = kernels.progression_expsum(start, step, count, float(h1), float(c), float(h2), float(g))
        return complex(re, im)
    with context(precision):
        H1, C, H2, G = (to_mpfr(x) for x in (h1, c, h2, g))
        res, ims = [], []
        for k in range(count):
            n = mpfr(start + k * step)
            cos_, sin_ = e_turns(H1 * n**C + H2 * n**G)
            res.append(cos_)
            ims.append(sin_)
        return complex(float(tree_sum(res)), float(tree_sum(ims)))


def _first_in_class(lo: int, d: int, a: int) -> int:
    """Least n > lo with n = a mod d."""
    return lo + 1 + (a - lo - 1) % d


@dataclass(frozen=True)
class BoundCheck:
    direct: float
    bound: float
    ratio: float
    terms: int

    def to_dict(self) -> dict:
        return {"direct_abs": self.direct, "bound": self.bound, "ratio": self.ratio, "terms": self.terms}


def lemma7_check(
    pair: ExponentPair,
    d: int,
    a: int,
    X: int,
    h1: float,
    h2: float,
    c: float,
    gamma: float,
    X1: Optional[int] = None,
) -> BoundCheck:
    """Direct |sum_{X < n <= X1, n = a mod d} e(h1 n^c + h2 n^g)| against lemma7_bound (X1 = 2X by default)."""
    X1 = 2 * X if X1 is None else X1
    if not X < X1 <= 2 * X:
        raise ValidationError(f"need X < X1 <= 2X, got X={X}, X1={X1}")
    if X * d > LEMMA7_BUDGET:
        raise BudgetError(f"X*d = {X * d} exceeds direct-summation budget {LEMMA7_BUDGET}")
    start = _first_in_class(X, d, a)
    count = (X1 - start) // d + 1 if start <= X1 else 0
    direct = abs(progression_expsum(start, d, count, h1, float(c), h2, float(gamma)))
    bound = lemma7_bound(pair, d, X, h1, h2, c, gamma)
    return BoundCheck(direct, bound, direct / bound, count)


def vdc_check(pair: ExponentPair, Y: float, X: int, s: float = 1.5) -> BoundCheck:
    """Direct sum over X < n <= 2X of e(f(n)) with f(n) = (Y X / s) (n/X)^s,
    so that |f^(m)| has size Y X^(1-m), against vdc_bound."""
    h1 = Y * X ** (1 - s) / s
    direct = abs(progression_expsum(X + 1, 1, X, h1, s, 0.0, 1.0))
    bound = vdc_bound(pair, Y, X)
    return BoundCheck(direct, bound, direct / bound, X)
