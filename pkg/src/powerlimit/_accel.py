"""Backend selection for the hot kernels.

Numba is used when importable unless ``POWERLIMIT_DISABLE_NUMBA`` is set to a
truthy value, in which case the vectorised numpy kernels are used instead.
"""
import os

_FALSY = ("", "0", "false", "no", "off")


def _numba_requested():
    return os.environ.get("POWERLIMIT_DISABLE_NUMBA", "").strip().lower() in _FALSY


try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and _numba_requested()
BACKEND = "numba" if USE_NUMBA else "numpy"


def njit(*args, **kwargs):
    """``numba.njit`` with caching and nogil on; identity when numba is absent."""
    kwargs.setdefault("cache", True)
    kwargs.setdefault("nogil", True)
    if not HAS_NUMBA:
        if args and callable(args[0]):
            return args[0]
        return lambda f: f
    return numba.njit(*args, **kwargs)
