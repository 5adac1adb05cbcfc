"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the numpy
fallback.  Set ``PSBV_PURE_PYTHON=1`` to force the fallback.
"""
import os

if os.environ.get("PSBV_PURE_PYTHON"):
    from . import _fallback as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        from . import _fallback as _impl

        BACKEND = "python"

sieve_segment = _impl.sieve_segment
ndelta_brute = _impl.ndelta_brute
progression_expsum = _impl.progression_expsum

__all__ = ["BACKEND", "sieve_segment", "ndelta_brute", "progression_expsum"]
