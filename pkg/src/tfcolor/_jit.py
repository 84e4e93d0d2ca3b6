"""JIT switch.

Set ``TFCOLOR_DISABLE_JIT=1`` to run the oracle kernels as plain Python over
numpy arrays (useful for debugging and for machines without numba).
"""

import os

JIT_ENABLED = os.environ.get("TFCOLOR_DISABLE_JIT", "").lower() not in ("1", "true", "yes")

if JIT_ENABLED:
    try:
        from numba import njit as _numba_njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        JIT_ENABLED = False


def jit(func):
    """Compile ``func`` with numba when enabled, else return it untouched."""
    if JIT_ENABLED:
        return _numba_njit(cache=True, nogil=True)(func)
    return func
