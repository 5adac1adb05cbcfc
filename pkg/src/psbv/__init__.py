"""Verification lab for exponential sums over Piatetski-Shapiro primes in progressions."""

__version__ = "0.1.0"
