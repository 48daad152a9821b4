"""Backend selection for the numeric kernels.

``ALEX_NUMBA=0`` forces the pure-numpy kernels even when numba is importable.
``ALEX_THREADS`` overrides the number of sweep workers.
"""
import os

try:
    import numba as nb
except ImportError:  # pragma: no cover - numba is a declared dependency
    nb = None

USE_NUMBA = nb is not None and os.environ.get("ALEX_NUMBA", "1").lower() not in ("0", "false", "no", "off")

CACHE = True
NOGIL = True


def njit(func):
    """``numba.njit`` with the package defaults; a no-op when numba is missing."""
    if nb is None:
        return func
    return nb.njit(cache=CACHE, nogil=NOGIL)(func)


def worker_count():
    env = os.environ.get("ALEX_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1
