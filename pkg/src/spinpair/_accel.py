"""Numba dispatch for the hot kernels.

Set ``SPINPAIR_NO_NUMBA=1`` before import to force the pure-numpy kernels
(also the automatic fallback when numba is missing).
"""
import os

_flag = os.environ.get("SPINPAIR_NO_NUMBA", "").strip().lower()

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and _flag not in ("1", "true", "yes", "on")


def njit(func):
    """Compile ``func`` with numba in nopython mode, or return it unchanged."""
    if not HAVE_NUMBA:
        return func
    return numba.njit(cache=True, nogil=True)(func)
